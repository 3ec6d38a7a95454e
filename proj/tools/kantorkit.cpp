// Command-line front end: Kantor squares and products, identity checks,
// classifications, U(n) tables, the graded algebra W and the catalog.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "kantorkit/catalog.hpp"
#include "kantorkit/classify.hpp"
#include "kantorkit/error.hpp"
#include "kantorkit/identities.hpp"
#include "kantorkit/io.hpp"
#include "kantorkit/kantor.hpp"
#include "kantorkit/un_algebra.hpp"
#include "kantorkit/witt.hpp"

using namespace kantorkit;

namespace {

enum Exit { Ok = 0, ParseFailure = 2, Precondition = 3, CheckFailed = 4, SelfTestFailed = 5 };

// "catalog:NAME" or a path to a JSON algebra file.
Algebra load_source(const std::string& source)
{
    if (source.rfind("catalog:", 0) == 0) return catalog_entry(source.substr(8)).algebra;
    std::ifstream in(source);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + source + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_algebra(buf.str());
}

// "a=1,b=0" into parameter bindings.
std::map<Var, Poly> parse_bindings(const std::string& text)
{
    std::map<Var, Poly> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "expected name=value in '" + item + "'");
        std::string name = item.substr(0, eq);
        name.erase(std::remove_if(name.begin(), name.end(), ::isspace), name.end());
        out[intern(name)] = parse_poly(item.substr(eq + 1));
    }
    return out;
}

Algebra bound(Algebra a, const std::string& set)
{
    if (set.empty()) return a;
    auto b = parse_bindings(set);
    for (auto& s : a.slots) s.mult = s.mult.substitute(b);
    return a;
}

// "SOURCE" or "SOURCE#slot".
Multiplication load_operation(const std::string& spec, const std::string& set, std::vector<std::string>& labels)
{
    auto hash = spec.find('#');
    Algebra a = bound(load_source(spec.substr(0, hash)), set);
    labels = a.basis;
    return hash == std::string::npos ? a.mult() : a.slot(spec.substr(hash + 1));
}

std::vector<std::string> split(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

int run_square(const std::string& source, const std::string& u_spec, bool right, const std::string& set)
{
    Algebra a = bound(load_source(source), set);
    Element u = parse_vector(u_spec, a.dim());
    Multiplication sq = right ? right_kantor_square(a.mult(), u) : kantor_square(a.mult(), u);
    std::cout << "u = " << u.to_string(a.basis) << "\n" << render_table(sq, a.basis, "*");
    return Ok;
}

int run_product(const std::string& first, const std::string& second, const std::string& u_spec,
                const std::string& set)
{
    std::vector<std::string> labels;
    Multiplication a, b;
    if (second.empty()) {
        Algebra alg = bound(load_source(first), set);
        if (alg.slots.size() < 2) throw Error(ErrorKind::SlotMismatch, "'" + alg.name + "' has a single operation");
        a = alg.slots[0].mult;
        b = alg.slots[1].mult;
        labels = alg.basis;
    } else {
        a = load_operation(first, set, labels);
        b = load_operation(second, set, labels);
    }
    Element u = parse_vector(u_spec, a.dim());
    std::cout << "u = " << u.to_string(labels) << "\n" << render_table(kantor_product(a, b, u), labels, "*");
    return Ok;
}

int run_check(const std::string& source, const std::string& ids, const std::string& slots, const std::string& set)
{
    Algebra a = bound(load_source(source), set);
    std::vector<Multiplication> mults;
    if (slots.empty())
        for (auto& s : a.slots) mults.push_back(s.mult);
    else
        for (auto& name : split(slots)) mults.push_back(a.slot(name));
    bool all = true;
    for (auto& id : split(ids)) {
        Verdict v = check_identity(mults, builtin(id));
        all = all && v.holds;
        std::cout << id << ": " << (v.holds ? "holds" : "fails") << "\n";
        for (auto& o : v.obstructions) std::cout << "  " << o << " = 0\n";
    }
    return all ? Ok : CheckFailed;
}

int run_classify(const std::string& kind, const std::string& source, std::size_t depth, bool as_json,
                 const std::string& fixed_u, bool lie_check, const std::string& set)
{
    Algebra a = bound(load_source(source), set);
    ClassifyOptions opts;
    opts.max_depth = depth;
    if (!fixed_u.empty()) opts.fixed_u = parse_vector(fixed_u, a.dim());
    Classification c;
    if (kind == "poisson") c = poisson_structures(a, opts);
    else if (kind == "generic-poisson") c = generic_poisson_structures(a, opts);
    else c = postlie_structures(a, lie_check, opts);
    if (as_json) {
        std::cout << render_classification_json(c, a);
        return Ok;
    }
    std::cout << render_classification_text(c, a);
    if (source.rfind("catalog:", 0) == 0) {
        const CatalogEntry& e = catalog_entry(source.substr(8));
        if (!e.normal_forms.empty()) std::cout << "\nnormal forms after a change of basis\n";
        for (auto& nf : e.normal_forms) std::cout << nf.label << "\n" << render_table(nf.to, a.basis, ".");
    }
    return Ok;
}

int run_un_table(std::size_t dim, const std::string& u_spec, bool as_json)
{
    std::optional<Element> u;
    if (!u_spec.empty()) u = parse_vector(u_spec, dim);
    auto table = un_table(dim, u);
    std::cout << (as_json ? render_un_table_json(table) : render_un_table(table));
    return Ok;
}

int run_witt(const std::string& mode, const std::string& u_spec, const std::string& w_spec, const std::string& a_spec,
             const std::string& x_spec, const std::string& y_spec)
{
    WittConfig cfg{parse_rational(a_spec), parse_graded(w_spec)};
    GradedElement u = parse_graded(u_spec);
    auto show = [&](const GradedElement& x, const GradedElement& y) {
        GradedElement star = witt_star(x, y, u, cfg), curly = witt_curly(x, y, u, cfg);
        if (mode != "curly") std::cout << x.to_string() << " * " << y.to_string() << " = " << star.to_string() << "\n";
        if (mode != "star")
            std::cout << "{" << x.to_string() << ", " << y.to_string() << "} = " << curly.to_string() << "\n";
        if (!(star == witt_star_direct(x, y, u, cfg)) || !(curly == witt_curly_direct(x, y, u, cfg))) return false;
        return true;
    };
    bool agree = true;
    if (mode == "demo" && x_spec.empty()) {
        std::cout << "a = " << to_string(cfg.a) << ", w = " << cfg.w.to_string() << ", u = " << u.to_string() << "\n";
        for (auto x : {GradedGen::L(0), GradedGen::L(1), GradedGen::I(0)})
            for (auto y : {GradedGen::L(0), GradedGen::L(1), GradedGen::I(0)})
                if (!(y < x)) agree = show(x, y) && agree;
    } else {
        if (x_spec.empty() || y_spec.empty()) throw Error(ErrorKind::ParseError, "--x and --y are required");
        agree = show(parse_graded(x_spec), parse_graded(y_spec));
    }
    if (!agree) {
        std::cout << "closed formulas disagree with the direct Kantor computation\n";
        return CheckFailed;
    }
    return Ok;
}

int run_catalog(const std::string& action, const std::string& name, bool as_json)
{
    if (action == "selftest") {
        int failures = 0;
        for (auto& e : build_catalog()) {
            auto f = self_test(e);
            std::cout << e.algebra.name << ": " << (f.empty() ? "ok" : "FAILED") << "\n";
            for (auto& line : f) std::cout << "  " << line << "\n";
            failures += static_cast<int>(f.size());
        }
        return failures == 0 ? Ok : SelfTestFailed;
    }
    if (action == "list") {
        for (auto& e : load_catalog()) {
            std::cout << e.algebra.name << " (dim " << e.algebra.dim() << ")";
            for (auto& t : e.tags)
                if (t.holds && t.bindings.empty()) std::cout << " " << t.identity;
            std::cout << "\n";
        }
        return Ok;
    }
    if (name.empty()) throw Error(ErrorKind::ParseError, "catalog " + action + " needs a name");
    const CatalogEntry& e = catalog_entry(name);
    if (as_json || action == "export") {
        std::cout << render_algebra(e.algebra);
        return Ok;
    }
    const Algebra& a = e.algebra;
    std::cout << a.name << ", dimension " << a.dim() << "\n";
    if (!a.params.empty()) {
        std::cout << "parameters:";
        for (auto& p : a.params) std::cout << " " << p;
        std::cout << "\n";
    }
    for (auto& c : a.constraints) std::cout << "constraint: " << c << " = 0\n";
    for (auto& s : a.slots) std::cout << "[" << s.name << "]\n" << render_table(s.mult, a.basis, ".");
    for (auto& t : e.tags) {
        std::cout << (t.holds ? "satisfies " : "violates ") << t.identity;
        for (auto& [k, v] : t.bindings) std::cout << " [" << k << " = " << v << "]";
        std::cout << "\n";
    }
    for (auto& s : e.squares) std::cout << "Kantor square, " << s.label << "\n" << render_table(s.table, a.basis, "*");
    for (auto& w : e.witnesses) std::cout << "witness " << w.label << " onto " << w.target << ": " << w.M.to_string() << "\n";
    for (auto& nf : e.normal_forms) std::cout << "normal form " << nf.label << "\n" << render_table(nf.to, a.basis, ".");
    for (auto& n : e.notes) std::cout << "note: " << n << "\n";
    return Ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Kantor products and identities of finite-dimensional algebras"};
    app.require_subcommand(1);

    std::string source, second, u_spec, set, ids, slots, kind, fixed_u, mode, w_spec, a_spec = "0", x_spec, y_spec,
                                                                                  action, name;
    bool right = false, as_json = false, no_lie_check = false;
    std::size_t depth = 16, dim = 2;

    auto* square = app.add_subcommand("square", "Kantor square of an algebra");
    square->add_option("source", source, "JSON file or catalog:NAME")->required();
    square->add_option("--u", u_spec, "reference vector, e.g. u=(1,0,1) or u=e3 (default symbolic)");
    square->add_flag("--right", right, "use the right Kantor square");
    square->add_option("--set", set, "parameter values, e.g. alpha=0");

    auto* product = app.add_subcommand("product", "Kantor product of two multiplications");
    product->add_option("first", source, "SOURCE[#slot]")->required();
    product->add_option("second", second, "SOURCE[#slot]; omitted for a two-operation algebra");
    product->add_option("--u", u_spec, "reference vector (default symbolic)");
    product->add_option("--set", set, "parameter values");

    auto* check = app.add_subcommand("check", "verify identities");
    check->add_option("source", source, "JSON file or catalog:NAME")->required();
    check->add_option("--id", ids, "identity names, comma separated")->required();
    check->add_option("--slots", slots, "operations to use, comma separated (default all)");
    check->add_option("--set", set, "parameter values");

    auto* classify = app.add_subcommand("classify", "classify Poisson or commutative post-Lie structures");
    classify->add_option("kind", kind, "poisson | generic-poisson | postlie")
        ->required()
        ->check(CLI::IsMember({"poisson", "generic-poisson", "postlie"}));
    classify->add_option("source", source, "JSON file or catalog:NAME")->required();
    classify->add_option("--max-depth", depth, "branching depth of the quadratic stage");
    classify->add_flag("--json", as_json, "structured output");
    classify->add_option("--fixed-u", fixed_u, "impose the linear stage at this vector only");
    classify->add_flag("--no-lie-check", no_lie_check, "skip the Lie check for postlie");
    classify->add_option("--set", set, "parameter values");

    auto* un = app.add_subcommand("un-table", "bracket table of U(n)");
    un->add_option("--dim", dim, "n")->required()->check(CLI::Range(1, 4));
    un->add_option("--u", u_spec, "reference vector (default e1)");
    un->add_flag("--json", as_json, "structured output");

    auto* witt = app.add_subcommand("witt", "products of the graded algebra W");
    witt->add_option("mode", mode, "demo | star | curly")->required()->check(CLI::IsMember({"demo", "star", "curly"}));
    witt->add_option("--u", u_spec, "e.g. L1 + 2*I0")->required();
    witt->add_option("--w", w_spec, "weight of the dot product")->required();
    witt->add_option("--a", a_spec, "bracket shift");
    witt->add_option("--x", x_spec, "left operand");
    witt->add_option("--y", y_spec, "right operand");

    auto* cat = app.add_subcommand("catalog", "built-in algebras");
    cat->add_option("action", action, "list | show | export | selftest")
        ->required()
        ->check(CLI::IsMember({"list", "show", "export", "selftest"}));
    cat->add_option("name", name, "algebra name");
    cat->add_flag("--json", as_json, "print the algebra file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : ParseFailure;
    }

    try {
        if (*square) return run_square(source, u_spec, right, set);
        if (*product) return run_product(source, second, u_spec, set);
        if (*check) return run_check(source, ids, slots, set);
        if (*classify) return run_classify(kind, source, depth, as_json, fixed_u, !no_lie_check, set);
        if (*un) return run_un_table(dim, u_spec, as_json);
        if (*witt) return run_witt(mode, u_spec, w_spec, a_spec, x_spec, y_spec);
        if (*cat) return run_catalog(action, name, as_json);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::ParseError:
        case ErrorKind::UnknownIdentity:
        case ErrorKind::UndeclaredParam:
            return ParseFailure;
        case ErrorKind::CatalogSelfTestFailed:
            return SelfTestFailed;
        default:
            return Precondition;
        }
    }
    return Ok;
}
