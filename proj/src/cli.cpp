#include "omegalie/cli.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "omegalie/backends.hpp"
#include "omegalie/identity.hpp"
#include "omegalie/json_io.hpp"
#include "omegalie/linalg.hpp"
#include "omegalie/permgroup.hpp"
#include "omegalie/structconst.hpp"

namespace omegalie::cli {

namespace {

class UsageFailure : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// {command, seed, params, status, witnesses[], counts{}} plus optional data.
struct Report {
    std::string command;
    std::uint64_t seed = 0;
    Json params = Json::object();
    bool pass = true;
    std::vector<std::string> witnesses;
    Json counts = Json::object();
    std::vector<std::string> lines;
    Json data;

    void fail(std::string witness) {
        pass = false;
        witnesses.push_back(std::move(witness));
    }

    Json to_json() const {
        Json j{{"command", command}, {"seed", seed}, {"params", params}, {"status", pass ? "pass" : "fail"},
               {"witnesses", witnesses}, {"counts", counts}};
        if (!data.is_null()) j["data"] = data;
        return j;
    }

    std::string text() const {
        std::ostringstream os;
        os << "command: " << command << "\nseed: " << seed << "\n";
        if (!params.empty()) {
            os << "params:";
            for (const auto& [k, v] : params.items()) os << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
            os << "\n";
        }
        for (const auto& l : lines) os << l << "\n";
        for (const auto& w : witnesses) os << "witness: " << w << "\n";
        if (!counts.empty()) {
            os << "counts:";
            for (const auto& [k, v] : counts.items()) os << " " << k << "=" << v.dump();
            os << "\n";
        }
        os << "status: " << (pass ? "pass" : "fail") << "\n";
        return os.str();
    }
};

struct Options {
    std::string output = "text";
    bool json = false;
    std::uint64_t seed = 0;
    std::size_t trials = 100;

    // verify-identity
    std::string kind;
    std::string trace_word;

    // group
    std::string group_name;
    bool list = false;
    bool verify = false;

    // backend / structure
    std::string action;
    std::string backend;
    std::size_t n = 2;
    std::size_t rows = 2;
    std::size_t cols = 3;
    std::size_t order = 2;
    int variant = 3;
    std::string form = "full";
    std::string file;
};

AssocKind require_kind(const std::string& text) {
    auto k = parse_assoc_kind(text);
    if (!k) throw UsageFailure("unknown associativity kind: " + text);
    return *k;
}

CubicVariant require_variant(int v) {
    auto cv = cubic_variant_from_int(v);
    if (!cv) throw UsageFailure("cubic variant must be 1..4, got " + std::to_string(v));
    return *cv;
}

std::vector<int> parse_word(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw UsageFailure("trace word must be comma-separated generator indices, got: " + text);
        out.push_back(std::stoi(part));
    }
    if (out.size() != 5) throw UsageFailure("trace word needs exactly five letters");
    for (int x : out)
        if (x < 1 || x > 5) throw UsageFailure("trace word letters must lie in 1..5");
    return out;
}

// ------------------------------------------------------------------ verify-identity

void cmd_verify_identity(const Options& o, Report& rep) {
    std::vector<AssocKind> kinds;
    if (o.kind.empty()) kinds = {AssocKind::First, AssocKind::Second};
    else kinds = {require_kind(o.kind)};
    rep.params["kind"] = o.kind.empty() ? "both" : to_string(kinds.front());

    if (!o.trace_word.empty()) {
        if (kinds.size() != 1) throw UsageFailure("--trace-word needs --kind");
        rep.params["trace_word"] = o.trace_word;
        const FlatWord word(parse_word(o.trace_word));
        const auto entries = trace_word(word, kinds.front());
        CycNum sum;
        Json arr = Json::array();
        for (const auto& e : entries) {
            sum += e.coeff;
            arr.push_back(to_json(e));
        }
        rep.lines.push_back("trace of " + word.str() + " (" + to_string(kinds.front()) + " kind)");
        std::istringstream table(render_trace_table(entries));
        for (std::string line; std::getline(table, line);) rep.lines.push_back(line);
        rep.lines.push_back("sum of coefficients: " + sum.str());
        rep.counts["contributions"] = entries.size();
        rep.data = Json{{"word", word.gens()}, {"entries", std::move(arr)}, {"sum", to_json(sum)}};
        if (!sum.is_zero()) rep.fail("coefficients of " + word.str() + " sum to " + sum.str());
        return;
    }

    Json reports = Json::array();
    for (auto kind : kinds) {
        const auto v = verify_basic_identity(kind);
        reports.push_back(to_json(v));
        const std::string k = to_string(kind);
        rep.lines.push_back(k + " kind: " + std::to_string(v.bracketed_term_count) + " bracketed monomials, " +
                            std::to_string(v.flat_word_count) + " flat words, contributions per word " +
                            std::to_string(v.min_contributions) + ".." + std::to_string(v.max_contributions) + ", " +
                            (v.verified() ? "all coefficients 0" : "nonzero residual"));
        rep.counts[k + "_bracketed_terms"] = v.bracketed_term_count;
        rep.counts[k + "_flat_words"] = v.flat_word_count;
        rep.counts[k + "_nonzero_words"] = v.nonzero_words.size();
        if (!v.verified())
            rep.fail(k + " kind: " + v.nonzero_words.front().first.str() + " has coefficient " +
                     v.nonzero_words.front().second.str());
    }
    rep.data = Json{{"reports", std::move(reports)}};
}

// ------------------------------------------------------------------ group

void cmd_group(const Options& o, Report& rep) {
    rep.params["group"] = o.group_name;
    PermSet g;
    if (o.group_name == "ga15") g = ga15();
    else if (o.group_name == "d10") g = d10();
    else if (o.group_name == "z5") g = z5();
    else throw UsageFailure("unknown group: " + o.group_name + " (expected ga15, d10 or z5)");

    const bool list = o.list || !o.verify;
    const auto rows = coset_rows();
    const auto names = coset_row_names();
    Json listing = Json::array();
    if (list) {
        bool first_block = true;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            std::vector<std::string> block;
            for (std::size_t k = 0; k < rows[r].size(); ++k) {
                if (!g.contains(rows[r][k])) continue;
                std::string name = names[r][k];
                name.resize(std::max<std::size_t>(name.size(), 13), ' ');
                block.push_back(name + "  " + rows[r][k].cycle_str());
                listing.push_back(Json{{"row", r}, {"name", names[r][k]}, {"cycles", rows[r][k].cycle_str()}});
            }
            if (block.empty()) continue;
            if (!first_block) rep.lines.emplace_back();
            first_block = false;
            for (auto& l : block) rep.lines.push_back(std::move(l));
        }
    }
    rep.counts["order"] = g.order();
    rep.data = Json{{"elements", listing}};

    if (o.verify) {
        if (!g.is_group()) rep.fail(o.group_name + " is not closed under products");
        if (o.group_name == "ga15") {
            const auto p = verify_presentation(g);
            Json checks = Json::array();
            for (const auto& c : p.checks) {
                rep.lines.push_back(c.relation + ": " + (c.pass ? "pass" : "fail"));
                checks.push_back(Json{{"relation", c.relation}, {"pass", c.pass}});
                if (!c.pass) rep.fail("relation " + c.relation + " fails");
            }
            rep.data["relations"] = checks;
        } else {
            const std::size_t expected = o.group_name == "d10" ? 10 : 5;
            const bool ok = g.order() == expected;
            rep.lines.push_back("order " + std::to_string(g.order()) + " = " + std::to_string(expected) + ": " +
                                (ok ? "pass" : "fail"));
            if (!ok) rep.fail("order is " + std::to_string(g.order()));
        }
        rep.lines.push_back(std::string("closed subgroup: ") + (g.is_group() ? "yes" : "no"));
    }
}

// ------------------------------------------------------------------ backend

// A backend packaged with a seeded element sampler.
template <class A, class Sample>
void backend_checks(const Options& o, Report& rep, const A& alg, Sample sample) {
    if (o.action == "check-assoc") {
        const AssocKind kind = o.kind.empty() ? AssocKind::Second : require_kind(o.kind);
        rep.params["kind"] = to_string(kind);
        const auto r = check_associativity(alg, kind, sample, o.trials, o.seed);
        rep.counts["trials"] = r.trials;
        rep.counts["failures"] = r.failures;
        if (r.pass()) {
            rep.lines.push_back(to_string(kind) + "-kind associativity holds on all " + std::to_string(r.trials) + " trials");
        } else {
            rep.lines.push_back("counterexample found: " + to_string(kind) + "-kind associativity fails on " +
                                std::to_string(r.failures) + " of " + std::to_string(r.trials) + " trials");
            rep.fail(r.witness);
        }
    } else if (o.action == "identity") {
        std::size_t failures = 0;
        std::optional<std::size_t> first;
        for (std::size_t t = 0; t < o.trials; ++t) {
            std::array<element_t<A>, 5> args{sample(), sample(), sample(), sample(), sample()};
            const auto v = evaluate_basic_identity(alg, std::span<const element_t<A>, 5>(args));
            if (!alg.equal(v, alg.zero())) {
                ++failures;
                if (!first) first = t;
            }
        }
        rep.counts["trials"] = o.trials;
        rep.counts["failures"] = failures;
        rep.lines.push_back("basic identity: " + std::to_string(o.trials - failures) + "/" + std::to_string(o.trials) +
                            " trials give the zero element");
        if (first) rep.fail("nonzero basic identity at trial " + std::to_string(*first));
    } else {
        throw UsageFailure("unknown backend action: " + o.action);
    }
}

void add_relations(Report& rep, const RelationsReport& r) {
    Json arr = Json::array();
    for (const auto& x : r.relations) {
        std::string line = x.relation + ": " + (x.pass ? "pass" : "fail");
        if (x.scalar) line += " (scalar " + x.scalar->str() + ")";
        rep.lines.push_back(line);
        Json j{{"relation", x.relation}, {"pass", x.pass}, {"expected", to_json(x.expected)}};
        if (x.scalar) j["scalar"] = to_json(*x.scalar);
        arr.push_back(std::move(j));
        if (!x.pass) rep.fail(x.relation + " fails");
    }
    rep.counts["relations"] = r.relations.size();
    rep.data = Json{{"relations", std::move(arr)}};
}

void cmd_backend(const Options& o, Report& rep) {
    rep.params["action"] = o.action;
    rep.params["backend"] = o.backend;
    if (o.action != "check-assoc" && o.action != "identity" && o.action != "relations")
        throw UsageFailure("backend action must be check-assoc, identity or relations");
    if (o.action != "relations") rep.params["trials"] = o.trials;
    Sampler s(o.seed);

    if (o.action == "relations") {
        if (o.backend == "vector") {
            add_relations(rep, vector_l2_relations());
        } else if (o.backend == "cubic-traceless") {
            const CubicVariant v = require_variant(o.variant);
            rep.params["variant"] = o.variant;
            add_relations(rep, bracket_traceless_relations(v));
        } else {
            throw UsageFailure("relations are defined for the vector and cubic-traceless backends");
        }
        return;
    }

    if (o.backend == "vector") {
        if (o.n == 0) throw UsageFailure("--n must be positive");
        rep.params["n"] = o.n;
        const VecAlg alg(random_symmetric(s, o.n));
        backend_checks(o, rep, alg, [&] { return random_vec(s, o.n); });
    } else if (o.backend == "rect") {
        if (o.rows == 0 || o.cols == 0) throw UsageFailure("--rows and --cols must be positive");
        rep.params["rows"] = o.rows;
        rep.params["cols"] = o.cols;
        const RectAlg alg(o.rows, o.cols);
        backend_checks(o, rep, alg, [&] { return random_matrix(s, o.rows, o.cols); });
    } else if (o.backend == "trace") {
        if (o.n == 0) throw UsageFailure("--n must be positive");
        rep.params["n"] = o.n;
        const TraceAlg alg(o.n);
        backend_checks(o, rep, alg, [&] { return random_matrix(s, o.n, o.n); });
    } else if (o.backend == "cubic") {
        if (o.order == 0) throw UsageFailure("--order must be positive");
        const CubicVariant v = require_variant(o.variant);
        rep.params["variant"] = o.variant;
        rep.params["order"] = o.order;
        const CubicAlg alg(o.order, v);
        backend_checks(o, rep, alg, [&] { return random_cubic(s, o.order); });
    } else if (o.backend == "cubic-traceless") {
        const CubicVariant v = require_variant(o.variant);
        rep.params["variant"] = o.variant;
        const CubicAlg alg(2, v);
        const auto [e1, e2] = traceless_cubic_basis();
        backend_checks(o, rep, alg, [&] { return s.cyc() * e1 + s.cyc() * e2; });
    } else {
        throw UsageFailure("unknown backend: " + o.backend);
    }
}

// ------------------------------------------------------------------ structure

std::string index_name(std::size_t i) { return "e" + std::to_string(i + 1); }

void describe_constants(const Tensor13& c, Report& rep) {
    const std::size_t n = c.dim();
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) {
                std::string rhs;
                for (std::size_t m = 0; m < n; ++m) {
                    const CycNum& x = c(m, i, k, l);
                    if (x.is_zero()) continue;
                    ++nonzero;
                    if (!rhs.empty()) rhs += " + ";
                    rhs += x == CycNum(1) ? index_name(m) : "(" + x.str() + ") " + index_name(m);
                }
                if (!rhs.empty())
                    rep.lines.push_back("[" + index_name(i) + "," + index_name(k) + "," + index_name(l) + "] = " + rhs);
            }
    rep.counts["nonzero_constants"] = nonzero;
}

void run_structure_checks(const Tensor13& c, Report& rep) {
    const auto sym = check_omega_symmetry(c);
    rep.counts["symmetry_violations"] = sym.violations.size();
    rep.lines.push_back(std::string("omega-symmetry: ") + (sym.pass() ? "pass" : "fail"));
    if (!sym.pass()) {
        const auto& v = sym.violations.front();
        rep.fail("omega-symmetry " + v.chain + " fails at m=" + std::to_string(v.m + 1) + " i=" + std::to_string(v.i + 1) +
                 " k=" + std::to_string(v.k + 1) + " l=" + std::to_string(v.l + 1));
    }
    const auto fund = check_fundamental(c);
    rep.counts["fundamental_equations"] = fund.equations;
    rep.counts["fundamental_violations"] = fund.violations;
    rep.lines.push_back(std::string("fundamental identity: ") + (fund.pass() ? "pass" : "fail") + " (" +
                        std::to_string(fund.equations) + " equations)");
    if (fund.witness) {
        std::string idx;
        for (auto x : fund.witness->lower) idx += std::to_string(x + 1);
        rep.fail("fundamental identity residual " + fund.witness->value.str() + " at (i,k,l,r,s)=(" + idx +
                 "), p=" + std::to_string(fund.witness->upper + 1));
    }
    std::size_t cyclic_ok = 0;
    for (std::size_t m = 0; m < c.dim(); ++m) cyclic_ok += in_cyclic_space(slice(c, m)) ? 1 : 0;
    rep.counts["slices_in_cyclic_space"] = cyclic_ok;
    std::size_t omega_ok = 0;
    for (std::size_t m = 0; m < c.dim(); ++m) omega_ok += in_eigenspace(slice(c, m), CyclicLabel::Omega) ? 1 : 0;
    rep.counts["slices_in_omega_space"] = omega_ok;
}

template <class A>
Tensor13 extract_with(const A& alg, const std::vector<element_t<A>>& basis, BracketForm form) {
    return extract(alg, basis, form);
}

void cmd_structure(const Options& o, Report& rep) {
    rep.params["action"] = o.action;
    if (o.action == "dims") {
        rep.params["n"] = o.n;
        const std::size_t cyc = cyclic_space_dimension(o.n);
        const std::size_t eo = eigenspace_dimension(o.n, CyclicLabel::Omega);
        const std::size_t eb = eigenspace_dimension(o.n, CyclicLabel::OmegaBar);
        const std::size_t to = traceless_eigenspace_dimension(o.n, CyclicLabel::Omega);
        const std::size_t tb = traceless_eigenspace_dimension(o.n, CyclicLabel::OmegaBar);
        rep.lines.push_back("cyclic space: " + std::to_string(cyc));
        rep.lines.push_back("eigenspace omega (rho eigenvalue wbar): " + std::to_string(eo));
        rep.lines.push_back("eigenspace omega-bar (rho eigenvalue w): " + std::to_string(eb));
        rep.lines.push_back("traceless omega: " + std::to_string(to));
        rep.lines.push_back("traceless omega-bar: " + std::to_string(tb));
        rep.counts["cyclic"] = cyc;
        rep.counts["eigenspace_omega"] = eo;
        rep.counts["eigenspace_omega_bar"] = eb;
        rep.counts["traceless_omega"] = to;
        rep.counts["traceless_omega_bar"] = tb;
        if (cyc != eo + eb) rep.fail("cyclic space is not the sum of the two eigenspaces");
        return;
    }

    if (o.action == "check") {
        if (o.file.empty()) throw UsageFailure("structure check needs --file");
        rep.params["file"] = o.file;
        std::ifstream in(o.file);
        if (!in) throw UsageFailure("cannot open " + o.file);
        std::stringstream buf;
        buf << in.rdbuf();
        const Tensor13 c = tensor13_from_json(parse_json(buf.str()));
        rep.params["n"] = c.dim();
        run_structure_checks(c, rep);
        return;
    }

    if (o.action != "extract") throw UsageFailure("structure action must be extract, check or dims");
    const auto form = parse_bracket_form(o.form);
    if (!form) throw UsageFailure("unknown bracket form: " + o.form);
    rep.params["backend"] = o.backend;
    rep.params["form"] = to_string(*form);
    Tensor13 c;
    try {
        if (o.backend == "vector") {
            rep.params["n"] = o.n;
            const auto alg = VecAlg::standard(o.n);
            c = extract_with(alg, alg.canonical_basis(), *form);
        } else if (o.backend == "trace") {
            rep.params["n"] = o.n;
            const auto alg = TraceAlg(o.n).as_vec_alg();
            c = extract_with(alg, alg.canonical_basis(), *form);
        } else if (o.backend == "cubic-traceless") {
            const CubicVariant v = require_variant(o.variant);
            rep.params["variant"] = o.variant;
            const CubicAlg alg(2, v);
            const auto [e1, e2] = traceless_cubic_basis();
            c = extract_with(alg, std::vector<CubicMatrix>{e1, e2}, *form);
        } else {
            throw UsageFailure("structure extract supports vector, trace and cubic-traceless backends");
        }
    } catch (const SingularBasis& e) {
        rep.fail(std::string("singular basis: ") + e.what());
        return;
    } catch (const OutOfSpan& e) {
        rep.fail(std::string("bracket leaves the span: ") + e.what());
        return;
    }
    describe_constants(c, rep);
    run_structure_checks(c, rep);
    rep.data = Json{{"constants", to_json(c)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of ternary w-Lie algebra identities", "omegalie"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--output", o.output, "report format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--json", o.json, "same as --output json");

    auto* vi = app.add_subcommand("verify-identity", "expand the basic identity in the free ternary algebra");
    vi->add_option("--kind", o.kind, "first or second (default: both)");
    vi->add_option("--trace-word", o.trace_word, "comma-separated word, e.g. 1,4,3,2,5");

    auto* gr = app.add_subcommand("group", "the permutation groups indexing the identity");
    gr->add_option("name", o.group_name, "ga15, d10 or z5")->required();
    gr->add_flag("--list", o.list, "print elements by coset row");
    gr->add_flag("--verify", o.verify, "check closure and the presentation");

    auto* be = app.add_subcommand("backend", "checks on concrete ternary algebras");
    be->add_option("action", o.action, "check-assoc, identity or relations")->required();
    be->add_option("--backend", o.backend, "vector, rect, trace, cubic or cubic-traceless")->required();
    be->add_option("--n", o.n, "vector or matrix size");
    be->add_option("--rows", o.rows, "rows of rectangular matrices");
    be->add_option("--cols", o.cols, "columns of rectangular matrices");
    be->add_option("--order", o.order, "order of cubic matrices");
    be->add_option("--variant", o.variant, "cubic product variant 1..4");
    be->add_option("--kind", o.kind, "associativity kind to test (default second)");
    be->add_option("--trials", o.trials, "number of random trials");
    be->add_option("--seed", o.seed, "random seed");

    auto* st = app.add_subcommand("structure", "structure constants");
    st->add_option("action", o.action, "extract, check or dims")->required();
    st->add_option("--backend", o.backend, "vector, trace or cubic-traceless");
    st->add_option("--n", o.n, "dimension");
    st->add_option("--variant", o.variant, "cubic product variant 1..4");
    st->add_option("--form", o.form, "full, conjugate, epsilon, reduced or reduced-conjugate");
    st->add_option("--file", o.file, "Tensor13 JSON file");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Pass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Pass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    }
    if (o.json) o.output = "json";

    Report rep;
    try {
        if (vi->parsed()) {
            rep.command = "verify-identity";
            cmd_verify_identity(o, rep);
        } else if (gr->parsed()) {
            rep.command = "group";
            cmd_group(o, rep);
        } else if (be->parsed()) {
            rep.command = "backend";
            rep.seed = o.seed;
            cmd_backend(o, rep);
        } else {
            rep.command = "structure";
            cmd_structure(o, rep);
        }
    } catch (const UsageFailure& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    } catch (const JsonSchemaError& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    } catch (const DegreeError& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    }

    if (o.output == "json") out << rep.to_json().dump(2) << "\n";
    else out << rep.text();
    return rep.pass ? Pass : MathFailure;
}

}  // namespace omegalie::cli
