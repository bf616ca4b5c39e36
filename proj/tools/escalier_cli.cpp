// Command-line front end: counting, listing, Bar Codes, star sets,
// generating functions and the brute-force checks.

#include "json_io.hpp"

#include "escalier/barcode.hpp"
#include "escalier/bijections.hpp"
#include "escalier/counting.hpp"
#include "escalier/monomials.hpp"
#include "escalier/oracle.hpp"
#include "escalier/partitions.hpp"
#include "escalier/qpolys.hpp"
#include "escalier/starset.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace esc;
using esc::io::json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kBadInput = 3, kInfeasible = 4, kInternal = 5 };

struct Options {
    std::string format = "text";
    std::string out;
    int threads = 0;
};

struct Output {
    std::ostringstream text;
    json doc;
    bool has_doc = false;
    int code = kOk;
};

std::vector<long> parse_list(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed integer list '" + s + "'");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos)
            throw std::invalid_argument("malformed integer list '" + s + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    for (long v : parse_list(s)) out.push_back(static_cast<int>(v));
    return out;
}

// "5,4,3;4,1" -> two rows; '_' placeholders (shifted padding) are skipped
std::vector<std::vector<long>> parse_rows(const std::string& s) {
    std::vector<std::vector<long>> rows;
    std::stringstream ss(s);
    std::string row;
    while (std::getline(ss, row, ';')) {
        std::string cleaned;
        for (char ch : row)
            if (ch != '_') cleaned += ch;
        rows.push_back(parse_list(cleaned));
    }
    return rows;
}

std::string read_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json read_json(const std::string& path) {
    try {
        return json::parse(read_source(path));
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

std::string ideal_text(const std::vector<Term>& gens) {
    std::string s = "(";
    for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + to_string(gens[i]);
    return s + ")";
}

std::string rows_text(const PlanePartition& pp) {
    std::string s = "[";
    for (std::size_t i = 0; i < pp.rows.size(); ++i) {
        s += i ? ",[" : "[";
        for (std::size_t k = 0; k < (pp.shifted ? i : 0); ++k) s += "_,";
        for (std::size_t j = 0; j < pp.rows[i].size(); ++j) s += (j ? "," : "") + std::to_string(pp.rows[i][j]);
        s += "]";
    }
    return s + "]";
}

std::string tuple_text(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

// Term-set input shared by several subcommands.
struct TermInput {
    int vars = 3;
    std::string terms;
    std::string input;

    void attach(CLI::App* app, const std::string& what) {
        app->add_option("--vars,-n", vars, "number of variables")->check(CLI::PositiveNumber);
        app->add_option("--terms", terms, what + ", comma separated, e.g. \"1,x1,x2^2*x3\"");
        app->add_option("--input", input, what + " as a JSON array of exponent arrays (file or -)");
    }

    std::vector<Term> read() const {
        if (!terms.empty() && !input.empty()) throw std::invalid_argument("give either --terms or --input, not both");
        if (!input.empty()) return io::terms_from_json(read_json(input), static_cast<std::size_t>(vars));
        if (terms.empty()) throw std::invalid_argument("no terms given (use --terms or --input)");
        return parse_terms(terms, static_cast<std::size_t>(vars));
    }
};

struct CodeInput {
    std::string code;
    std::string rows;

    void attach(CLI::App* app) {
        app->add_option("--code", code, "bar code JSON file (or - for stdin)");
        app->add_option("--rows", rows, "bar lengths row by row, e.g. \"1,1,1,1,1;2,1,1,1;2,3\"");
    }

    BarCode read() const {
        if (!code.empty()) return io::barcode_from_json(read_json(code));
        if (rows.empty()) throw std::invalid_argument("no bar code given (use --code or --rows)");
        BarCode b;
        for (const auto& r : parse_rows(rows)) {
            std::vector<std::size_t> row;
            for (long v : r) {
                if (v < 1) throw std::invalid_argument("bar lengths must be positive");
                row.push_back(static_cast<std::size_t>(v));
            }
            b.rows.push_back(row);
        }
        b.n = b.rows.size();
        b.width = b.rows.empty() ? 0 : b.rows.front().size();
        check_structure(b);
        return b;
    }
};

void census_text(const BarListCensus& c, bool breakdown, std::ostream& os) {
    os << to_string(c.cls) << " ideals in " << c.n << " variables with Hilbert polynomial " << c.p << ": "
       << c.total.str() << '\n';
    if (!breakdown) return;
    os << "bar list      | ideals\n";
    for (const auto& r : c.rows) {
        std::string bl = tuple_text(r.bar_list);
        os << bl << std::string(bl.size() < 14 ? 14 - bl.size() : 1, ' ') << "| " << r.subtotal.str() << '\n';
        if (r.shapes.size() > 1 || (r.shapes.size() == 1 && r.bar_list.size() == 3 && r.bar_list[2] > 1))
            for (const auto& s : r.shapes) os << "    shape " << tuple_text(s.shape) << ": " << s.count.str() << '\n';
    }
    // bar lists of the form (p, h, 1) are summed together, as two-variable data
    std::vector<std::string> parts;
    BigInt lead = 0;
    bool grouped = c.n == 3;
    for (const auto& r : c.rows) {
        if (grouped && r.bar_list[2] == 1) lead += r.subtotal;
        else parts.push_back(r.subtotal.str());
    }
    os << "total " << c.total.str() << " = ";
    if (grouped) parts.insert(parts.begin(), lead.str());
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "+" : "") << parts[i];
    os << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bar Codes, star sets and (strongly) stable monomial ideals"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", opt.out, "write the output document to FILE");
    app.add_option("--threads", opt.threads, "OpenMP threads (0 = runtime default)")
        ->check(CLI::NonNegativeNumber)
        ->trigger_on_parse()
        ->each([](const std::string& v) {
            if (int t = std::stoi(v); t > 0) omp_set_num_threads(t);
        });

    Output out;
    auto json_mode = [&] { return opt.format == "json"; };
    auto emit_json = [&](json j) {
        out.doc = std::move(j);
        out.has_doc = true;
    };

    // count
    auto* count = app.add_subcommand("count", "count (strongly) stable ideals");
    int c_vars = 3, c_p = 0;
    std::string c_class = "stable";
    bool c_breakdown = false, c_serial = false;
    count->add_option("--vars", c_vars, "2 or 3")->required()->check(CLI::IsMember({2, 3}));
    count->add_option("--hilbert", c_p, "constant Hilbert polynomial p")->required()->check(CLI::PositiveNumber);
    count->add_option("--class", c_class)->check(CLI::IsMember({"stable", "strongly-stable"}));
    count->add_flag("--breakdown", c_breakdown, "per bar list subtotals");
    count->add_flag("--serial", c_serial, "use the serial reference kernels");
    count->callback([&] {
        auto c = census(c_vars, c_p, parse_class(c_class), c_serial ? Exec::serial : Exec::parallel);
        if (json_mode()) emit_json(io::to_json(c));
        else census_text(c, c_breakdown, out.text);
    });

    // list
    auto* list = app.add_subcommand("list", "list (strongly) stable ideals");
    int l_vars = 3, l_p = 0;
    std::string l_class = "stable", l_bar;
    list->add_option("--vars", l_vars, "2 or 3")->required()->check(CLI::IsMember({2, 3}));
    list->add_option("--hilbert", l_p, "constant Hilbert polynomial p")->required()->check(CLI::PositiveNumber);
    list->add_option("--class", l_class)->check(CLI::IsMember({"stable", "strongly-stable"}));
    list->add_option("--bar-list", l_bar, "only this bar list, e.g. 10,4,2");
    list->callback([&] {
        auto listing = list_ideals(l_p, l_vars, parse_class(l_class));
        if (!l_bar.empty()) {
            auto want = parse_int_list(l_bar);
            std::erase_if(listing.items, [&](const ListedIdeal& it) { return it.bar_list != want; });
        }
        if (json_mode()) return emit_json(io::to_json(listing));
        for (const auto& it : listing.items)
            out.text << tuple_text(it.bar_list) << "  "
                     << (l_vars == 2 ? tuple_text(std::vector<int>(it.partition.rows[0].begin(), it.partition.rows[0].end()))
                                     : rows_text(it.partition))
                     << "  " << ideal_text(it.ideal.generators) << '\n';
        out.text << listing.items.size() << " ideals\n";
    });

    // gf strict | shifted
    auto* gf = app.add_subcommand("gf", "norm generating functions");
    gf->require_subcommand(1);
    std::string g_lambda, g_mu, g_a, g_b;
    int g_c = 1, g_d = 1, gh_d = 0;
    long g_coeff = -1;
    auto gf_opts = [&](CLI::App* sc, bool skew) {
        sc->add_option("--lambda,--shape", g_lambda, "shape, e.g. 2,1")->required();
        if (skew) sc->add_option("--mu,--inner", g_mu, "inner shape (default zero)");
        sc->add_option("--a", g_a, "first-part bounds")->required();
        sc->add_option("--b", g_b, "last-part bounds (default all ones)");
        sc->add_option("--c", g_c);
        sc->add_option("--d", skew ? g_d : gh_d);
        sc->add_option("--coeff", g_coeff, "also report the coefficient of x^P");
    };
    auto* gfs = gf->add_subcommand("strict", "(c,d)-plane partitions of shape lambda/mu");
    gf_opts(gfs, true);
    auto* gfh = gf->add_subcommand("shifted", "shifted (c,d)-plane partitions");
    gf_opts(gfh, false);
    auto gf_run = [&](bool shifted) {
        auto lambda = parse_int_list(g_lambda);
        auto a = parse_list(g_a);
        auto b = g_b.empty() ? std::vector<long>(lambda.size(), 1) : parse_list(g_b);
        IntPoly poly = shifted ? gf_shifted(lambda, a, b, g_c, gh_d) : gf_strict(lambda, parse_int_list(g_mu), a, b, g_c, g_d);
        if (json_mode()) {
            json j = io::to_json(poly);
            if (g_coeff >= 0) j["coefficient"] = {{"degree", g_coeff}, {"value", poly.coeff(static_cast<int>(g_coeff)).str()}};
            return emit_json(j);
        }
        out.text << poly.to_string() << '\n';
        if (g_coeff >= 0) out.text << "coefficient of x^" << g_coeff << ": " << poly.coeff(static_cast<int>(g_coeff)).str() << '\n';
    };
    gfs->callback([&] { gf_run(false); });
    gfh->callback([&] { gf_run(true); });

    // partitions enumerate | count | validate
    auto* parts = app.add_subcommand("partitions", "integer and plane partitions");
    parts->require_subcommand(1);
    auto* pe = parts->add_subcommand("enumerate", "brute-force enumeration of plane partitions");
    std::string pe_shape, pe_mu, pe_a, pe_b;
    bool pe_shifted = false;
    int pe_c = 1, pe_d = 1;
    long pe_norm = 0;
    pe->add_option("--shape", pe_shape)->required();
    pe->add_option("--mu,--inner", pe_mu);
    pe->add_flag("--shifted", pe_shifted);
    pe->add_option("--c", pe_c);
    pe->add_option("--d", pe_d);
    pe->add_option("--a", pe_a, "first-part bounds (shifted: exact first parts)")->required();
    pe->add_option("--b", pe_b, "last-part bounds (default all ones)");
    pe->add_option("--norm", pe_norm)->required();
    pe->callback([&] {
        EnumerationRequest req;
        req.lambda = parse_int_list(pe_shape);
        req.mu = parse_int_list(pe_mu);
        req.shifted = pe_shifted;
        req.c = pe_c;
        req.d = pe_d;
        req.a = parse_list(pe_a);
        req.b = pe_b.empty() ? std::vector<long>(req.lambda.size(), 1) : parse_list(pe_b);
        req.norm = pe_norm;
        auto found = enumerate_plane_partitions(req);
        if (json_mode()) {
            json arr = json::array();
            for (const auto& pp : found) arr.push_back(io::to_json(pp));
            return emit_json(arr);
        }
        for (const auto& pp : found) out.text << rows_text(pp) << '\n';
        out.text << found.size() << " partitions\n";
    });
    auto* pc = parts->add_subcommand("count", "partitions into distinct parts");
    int pc_p = 0, pc_k = 0;
    pc->add_option("--p", pc_p)->required()->check(CLI::PositiveNumber);
    pc->add_option("--k", pc_k, "number of parts (default: all)")->check(CLI::NonNegativeNumber);
    pc->callback([&] {
        BigInt v = 0;
        if (pc_k > 0) v = count_Q(pc_p, pc_k);
        else
            for (int k = 1; k <= pc_p; ++k) v += count_Q(pc_p, k);
        if (json_mode()) return emit_json({{"p", pc_p}, {"k", pc_k}, {"count", v.str()}});
        out.text << v.str() << '\n';
    });
    auto* pv = parts->add_subcommand("validate", "check the row and column conditions");
    std::string pv_json, pv_rows, pv_shape;
    bool pv_shifted = false;
    int pv_c = 1, pv_d = 1;
    pv->add_option("--json", pv_json, "plane partition JSON (file or -)");
    pv->add_option("--rows", pv_rows, "entries row by row, e.g. \"5,4,3;4,1\"");
    pv->add_option("--shape", pv_shape, "shape (default: from the rows)");
    pv->add_flag("--shifted", pv_shifted);
    pv->add_option("--c", pv_c);
    pv->add_option("--d", pv_d);
    pv->callback([&] {
        PlanePartition pp;
        if (!pv_json.empty()) pp = io::plane_partition_from_json(read_json(pv_json));
        else {
            if (pv_rows.empty()) throw std::invalid_argument("give --json or --rows");
            auto rows = parse_rows(pv_rows);
            pp = pv_shifted ? make_shifted_pp(rows) : make_strict_pp(rows);
            pp.c = pv_c;
            pp.d = pv_d;
            if (!pv_shape.empty()) pp.lambda = parse_int_list(pv_shape);
        }
        bool ok = validate(pp);
        out.code = ok ? kOk : kNegative;
        if (json_mode()) return emit_json({{"valid", ok}, {"partition", io::to_json(pp)}});
        out.text << (ok ? "valid" : "not valid") << '\n';
    });

    // barcode encode | decode | check | render
    auto* bc = app.add_subcommand("barcode", "Bar Code tools");
    bc->require_subcommand(1);
    auto* be = bc->add_subcommand("encode", "Bar Code of a term set");
    TermInput be_in;
    be_in.attach(be, "terms");
    be->callback([&] {
        BarCode b = encode(be_in.read());
        if (json_mode()) return emit_json(io::to_json(b));
        for (std::size_t i = 0; i < b.n; ++i) {
            out.text << "row " << i + 1 << ":";
            for (auto len : b.rows[i]) out.text << ' ' << len;
            out.text << '\n';
        }
        auto bl = bar_list(b);
        out.text << "bar list " << tuple_text(std::vector<int>(bl.begin(), bl.end())) << '\n';
    });
    auto* bd = bc->add_subcommand("decode", "terms assigned by the canonical labelling");
    CodeInput bd_in;
    bd_in.attach(bd);
    bd->callback([&] {
        auto terms = decode(bd_in.read());
        if (json_mode()) return emit_json(io::to_json(terms));
        out.text << to_string(terms) << '\n';
    });
    auto* bk = bc->add_subcommand("check", "admissibility test");
    CodeInput bk_in;
    bk_in.attach(bk);
    bk->callback([&] {
        bool ok = is_admissible(bk_in.read());
        out.code = ok ? kOk : kNegative;
        if (json_mode()) return emit_json({{"admissible", ok}});
        out.text << (ok ? "admissible" : "not admissible") << '\n';
    });
    auto* br = bc->add_subcommand("render", "draw a Bar Code");
    CodeInput br_in;
    bool br_svg = false, br_nolabels = false;
    br_in.attach(br);
    br->add_flag("--svg", br_svg, "SVG instead of ASCII");
    br->add_flag("--no-labels", br_nolabels);
    br->callback([&] {
        out.text << render(br_in.read(), br_svg ? RenderFormat::svg : RenderFormat::ascii, !br_nolabels);
    });

    // star sets and stability
    TermInput st_in, pm_in, cs_in, css_in, rd_in;
    std::string cs_gens, css_gens;
    bool st_from_code = false;
    auto* st = app.add_subcommand("starset", "star set of an order ideal");
    st_in.attach(st, "order ideal");
    st->add_flag("--via-barcode", st_from_code, "use the Bar Code rules instead of the direct definition");
    st->callback([&] {
        auto N = OrderIdeal::make(static_cast<std::size_t>(st_in.vars), st_in.read());
        auto s = st_from_code ? star_set_from_barcode(encode(N.terms)) : star_set_direct(N);
        if (json_mode()) return emit_json(io::to_json(s.terms));
        out.text << to_string(s.terms) << '\n';
    });
    auto* pm = app.add_subcommand("pommaret", "Pommaret basis with multiplicative variables");
    pm_in.attach(pm, "order ideal");
    pm->callback([&] {
        auto N = OrderIdeal::make(static_cast<std::size_t>(pm_in.vars), pm_in.read());
        auto s = pommaret_basis(N);
        if (json_mode()) {
            json arr = json::array();
            for (const auto& t : s.terms) arr.push_back({{"term", io::to_json(t)}, {"multiplicative", multiplicative_vars(s.terms, t)}});
            return emit_json(arr);
        }
        for (const auto& t : s.terms) {
            out.text << to_string(t) << "  [";
            auto mv = multiplicative_vars(s.terms, t);
            for (std::size_t i = 0; i < mv.size(); ++i) out.text << (i ? "," : "") << 'x' << mv[i];
            out.text << "]\n";
        }
    });
    auto stability_cmd = [&](const std::string& name, TermInput& in, std::string& gens, bool strong) {
        auto* sc = app.add_subcommand(name, strong ? "strong stability test" : "stability test");
        in.attach(sc, "order ideal");
        sc->add_option("--gens", gens, "ideal generators instead of an order ideal");
        sc->callback([&, strong, name] {
            std::size_t n = static_cast<std::size_t>(in.vars);
            MonomialIdeal I = !gens.empty() ? MonomialIdeal::make(n, parse_terms(gens, n))
                                            : minimal_generators(OrderIdeal::make(n, in.read()));
            bool ok = strong ? is_strongly_stable(I) : is_stable(I);
            out.code = ok ? kOk : kNegative;
            std::string label = strong ? "strongly stable" : "stable";
            if (json_mode()) return emit_json({{strong ? "strongly_stable" : "stable", ok}, {"generators", io::to_json(I.generators)}});
            out.text << (ok ? label : "not " + label) << '\n';
        });
    };
    stability_cmd("check-stable", cs_in, cs_gens, false);
    stability_cmd("check-strongly-stable", css_in, css_gens, true);

    // verify
    auto* vf = app.add_subcommand("verify", "pipeline counts against brute force");
    int v_vars = 3, v_max = 0;
    std::string v_class = "all";
    vf->add_option("--vars", v_vars)->required()->check(CLI::IsMember({2, 3}));
    vf->add_option("--max-p", v_max)->required()->check(CLI::PositiveNumber);
    vf->add_option("--class", v_class)->check(CLI::IsMember({"stable", "strongly-stable", "all"}));
    vf->callback([&] {
        std::vector<IdealClass> classes;
        if (v_class != "strongly-stable") classes.push_back(IdealClass::stable);
        if (v_class != "stable") classes.push_back(IdealClass::strongly_stable);
        json rows = json::array();
        bool all_ok = true;
        out.text << "p   class            pipeline  oracle  status\n";
        for (int p = 1; p <= v_max; ++p)
            for (auto cls : classes) {
                BigInt pipe = census(v_vars, p, cls).total;
                BigInt oracle = count_by_definition(v_vars, p, cls);
                bool ok = pipe == oracle;
                all_ok = all_ok && ok;
                rows.push_back({{"p", p}, {"class", to_string(cls)}, {"pipeline", pipe.str()}, {"oracle", oracle.str()}, {"pass", ok}});
                std::string cname = to_string(cls);
                out.text << p << std::string(p < 10 ? 3 : 2, ' ') << cname << std::string(17 - cname.size(), ' ')
                         << pipe.str() << std::string(10 - std::min<std::size_t>(9, pipe.str().size()), ' ') << oracle.str()
                         << std::string(8 - std::min<std::size_t>(7, oracle.str().size()), ' ') << (ok ? "pass" : "FAIL") << '\n';
            }
        out.code = all_ok ? kOk : kNegative;
        if (json_mode()) emit_json({{"vars", v_vars}, {"max_p", v_max}, {"pass", all_ok}, {"rows", rows}});
    });

    // conjecture
    auto* cj = app.add_subcommand("conjecture", "four-variable ideals against three-dimensional partitions");
    int cj_p = 0;
    std::string cj_class = "stable";
    cj->add_option("--hilbert", cj_p)->required()->check(CLI::PositiveNumber);
    cj->add_option("--class", cj_class)->check(CLI::IsMember({"stable", "strongly-stable"}));
    cj->callback([&] {
        auto rep = conjecture_probe(4, cj_p, parse_class(cj_class));
        out.code = rep.all_agree() ? kOk : kNegative;
        if (json_mode()) return emit_json(io::to_json(rep));
        out.text << "n=4, p=" << cj_p << ", " << to_string(rep.cls)
                 << " ideals against " << (rep.cls == IdealClass::stable ? "strict" : "shifted") << " solid partitions\n";
        out.text << "bar list        ideals  partitions  status\n";
        for (const auto& r : rep.rows) {
            std::string bl = tuple_text(r.bar_list);
            out.text << bl << std::string(bl.size() < 16 ? 16 - bl.size() : 1, ' ') << r.ideals.str()
                     << std::string(8 - std::min<std::size_t>(7, r.ideals.str().size()), ' ') << r.partitions.str()
                     << std::string(12 - std::min<std::size_t>(11, r.partitions.str().size()), ' ')
                     << (r.agree() ? "agree" : "DISAGREE") << '\n';
        }
        out.text << (rep.all_agree() ? "all bar lists agree\n" : "some bar lists disagree\n");
    });

    // render
    auto* rd = app.add_subcommand("render", "draw the Bar Code of a term set");
    bool rd_svg = false, rd_nolabels = false;
    rd_in.attach(rd, "terms");
    rd->add_flag("--svg", rd_svg);
    rd->add_flag("--no-labels", rd_nolabels);
    rd->callback([&] {
        out.text << render(encode(rd_in.read()), rd_svg ? RenderFormat::svg : RenderFormat::ascii, !rd_nolabels);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: infeasible parameters: " << e.what() << '\n';
        return kInfeasible;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: out of range: " << e.what() << '\n';
        return kInfeasible;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: invalid input: " << e.what() << '\n';
        return kBadInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: invalid input: " << e.what() << '\n';
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << '\n';
        return kInternal;
    }

    std::string doc = out.has_doc ? out.doc.dump(2) + "\n" : out.text.str();
    if (!opt.out.empty()) {
        std::ofstream f(opt.out);
        if (!f) {
            std::cerr << "error: cannot write '" << opt.out << "'\n";
            return kBadInput;
        }
        f << doc;
    } else {
        std::cout << doc;
    }
    return out.code;
}
