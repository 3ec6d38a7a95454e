#include "kantorkit/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include <json.hpp>

#include "kantorkit/error.hpp"

namespace kantorkit {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what)
{
    throw Error(ErrorKind::ParseError, where + ": " + what);
}

const json& field(const json& obj, const std::string& key, const std::string& where)
{
    if (!obj.is_object()) parse_fail(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) parse_fail(where, "missing field '" + key + "'");
    return *it;
}

std::string as_string(const json& v, const std::string& where)
{
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    parse_fail(where, "expected a string");
}

std::vector<std::string> string_list(const json& obj, const std::string& key, const std::string& where)
{
    std::vector<std::string> out;
    if (!obj.contains(key)) return out;
    const json& arr = obj.at(key);
    if (!arr.is_array()) parse_fail(where + "." + key, "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i)
        out.push_back(as_string(arr[i], where + "." + key + "[" + std::to_string(i) + "]"));
    return out;
}

Poly parse_coeff(const std::string& text, const std::set<std::string>& declared, const std::string& where)
{
    Poly p;
    try {
        p = parse_poly(text);
    } catch (const Error& e) {
        parse_fail(where, e.what());
    }
    for (Var v : p.variables().items())
        if (!declared.count(var_name(v)))
            throw Error(ErrorKind::UndeclaredParam, where + ": '" + var_name(v) + "' is not a declared parameter");
    return p;
}

Multiplication parse_table(const json& arr, std::size_t n, const std::set<std::string>& declared,
                           const std::string& where)
{
    if (!arr.is_array()) parse_fail(where, "expected an array of entries");
    Multiplication m(n);
    for (std::size_t e = 0; e < arr.size(); ++e) {
        std::string at = where + "[" + std::to_string(e) + "]";
        std::size_t idx[3];
        const char* names[3] = {"i", "j", "k"};
        for (int t = 0; t < 3; ++t) {
            const json& v = field(arr[e], names[t], at);
            if (!v.is_number_integer()) parse_fail(at + "." + names[t], "expected an integer");
            long long x = v.get<long long>();
            if (x < 1 || static_cast<std::size_t>(x) > n)
                throw Error(ErrorKind::IndexOutOfRange,
                            at + "." + names[t] + ": index " + std::to_string(x) + " outside 1.." + std::to_string(n));
            idx[t] = static_cast<std::size_t>(x - 1);
        }
        Poly c = parse_coeff(as_string(field(arr[e], "coeff", at), at + ".coeff"), declared, at + ".coeff");
        m.at(idx[0], idx[1], idx[2]) += c;
    }
    return m;
}

ordered_json table_json(const Multiplication& m)
{
    ordered_json arr = ordered_json::array();
    std::size_t n = m.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!m.at(i, j, k).is_zero())
                    arr.push_back(ordered_json{{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"coeff", m.at(i, j, k).to_string()}});
    return arr;
}

ordered_json polys_json(const std::vector<Poly>& ps)
{
    ordered_json arr = ordered_json::array();
    for (auto& p : ps) arr.push_back(p.to_string());
    return arr;
}

ordered_json family_json(const SolutionFamily& f)
{
    ordered_json assignment = ordered_json::object();
    for (auto& name : f.unknowns) {
        auto it = f.assignment.find(name);
        if (it != f.assignment.end()) assignment[name] = it->second.to_string();
    }
    return ordered_json{{"label", f.label},
                        {"unknowns", f.unknowns},
                        {"assignment", assignment},
                        {"free", f.free},
                        {"equations", polys_json(f.equations)},
                        {"leading", f.leading},
                        {"inequations", polys_json(f.inequations)},
                        {"dim", f.table.dim()},
                        {"table", table_json(f.table)},
                        {"verified", f.verified}};
}

}  // namespace

Algebra parse_algebra(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        parse_fail("line " + std::to_string(e.byte), std::string("invalid JSON: ") + e.what());
    }
    Algebra a;
    a.name = as_string(field(doc, "name", "algebra"), "name");
    const json& dim = field(doc, "dim", "algebra");
    if (!dim.is_number_integer() || dim.get<long long>() < 1) parse_fail("dim", "expected a positive integer");
    std::size_t n = dim.get<std::size_t>();
    a.basis = string_list(doc, "basis", "algebra");
    if (a.basis.empty()) a.basis = default_labels(n);
    if (a.basis.size() != n)
        throw Error(ErrorKind::DimMismatch, "basis: " + std::to_string(a.basis.size()) + " labels for dimension " +
                                                std::to_string(n));
    a.params = string_list(doc, "params", "algebra");
    std::set<std::string> declared(a.params.begin(), a.params.end());
    auto constraints = string_list(doc, "constraints", "algebra");
    for (std::size_t i = 0; i < constraints.size(); ++i)
        a.constraints.push_back(parse_coeff(constraints[i], declared, "constraints[" + std::to_string(i) + "]"));

    bool has_table = doc.contains("table"), has_slots = doc.contains("slots");
    if (has_table == has_slots) parse_fail("algebra", "exactly one of 'table' and 'slots' is required");
    if (has_table) {
        a.slots.push_back({"mult", parse_table(doc.at("table"), n, declared, "table")});
    } else {
        const json& slots = doc.at("slots");
        if (!slots.is_array() || slots.empty()) parse_fail("slots", "expected a nonempty array");
        for (std::size_t s = 0; s < slots.size(); ++s) {
            std::string at = "slots[" + std::to_string(s) + "]";
            std::string name = as_string(field(slots[s], "name", at), at + ".name");
            a.slots.push_back({name, parse_table(field(slots[s], "table", at), n, declared, at + ".table")});
        }
    }
    a.validate();
    return a;
}

std::string render_algebra(const Algebra& a)
{
    ordered_json doc{{"name", a.name}, {"dim", a.dim()}, {"basis", a.basis}, {"params", a.params},
                     {"constraints", polys_json(a.constraints)}};
    if (a.slots.size() == 1 && a.slots.front().name == "mult") {
        doc["table"] = table_json(a.mult());
    } else {
        ordered_json slots = ordered_json::array();
        for (auto& s : a.slots) slots.push_back(ordered_json{{"name", s.name}, {"table", table_json(s.mult)}});
        doc["slots"] = slots;
    }
    return doc.dump(2) + "\n";
}

std::string render_table(const Multiplication& m, const std::vector<std::string>& labels, std::string_view op)
{
    std::vector<std::string> names = labels.empty() ? default_labels(m.dim()) : labels;
    std::string out;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) {
            Element v = m.product(i, j);
            if (v.is_zero()) continue;
            out += names[i] + " " + std::string(op) + " " + names[j] + " = " + v.to_string(names) + "\n";
        }
    return out.empty() ? "(zero product)\n" : out;
}

Element parse_vector(std::string_view spec, std::size_t dim)
{
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.rfind("u=", 0) == 0) s = s.substr(2);
    if (s.empty() || s == "symbolic") return Element::symbolic(dim, "u");
    auto fail = [&](const std::string& what) {
        throw Error(ErrorKind::ParseError, "vector '" + std::string(spec) + "': " + what);
    };
    if (s[0] == 'e') {
        std::size_t i = 0;
        try {
            i = std::stoul(s.substr(1));
        } catch (...) {
            fail("expected e<index>");
        }
        if (i < 1 || i > dim) throw Error(ErrorKind::IndexOutOfRange, "vector '" + std::string(spec) + "': no basis vector e" + std::to_string(i));
        return Element::basis(dim, i - 1);
    }
    if (s.front() != '(' || s.back() != ')') fail("expected (c1,...,cn) or e<index>");
    std::vector<Poly> coords;
    std::string body = s.substr(1, s.size() - 2);
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t comma = body.find(',', start);
        std::string part = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (part.empty()) fail("empty coordinate");
        coords.push_back(parse_poly(part));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (coords.size() != dim)
        throw Error(ErrorKind::DimMismatch, "vector '" + std::string(spec) + "' has " + std::to_string(coords.size()) +
                                                " coordinates, expected " + std::to_string(dim));
    return Element(coords);
}

std::string render_family_json(const SolutionFamily& f, const std::vector<std::string>& labels)
{
    ordered_json doc = family_json(f);
    doc["basis"] = labels.empty() ? default_labels(f.table.dim()) : labels;
    return doc.dump(2) + "\n";
}

SolutionFamily parse_family_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        parse_fail("family", std::string("invalid JSON: ") + e.what());
    }
    SolutionFamily f;
    f.label = as_string(field(doc, "label", "family"), "label");
    f.unknowns = string_list(doc, "unknowns", "family");
    f.free = string_list(doc, "free", "family");
    f.leading = string_list(doc, "leading", "family");
    std::set<std::string> declared(f.unknowns.begin(), f.unknowns.end());
    for (auto& [k, v] : field(doc, "assignment", "family").items())
        f.assignment.emplace(k, parse_coeff(as_string(v, "assignment." + k), declared, "assignment." + k));
    for (auto& s : string_list(doc, "equations", "family")) f.equations.push_back(parse_coeff(s, declared, "equations"));
    for (auto& s : string_list(doc, "inequations", "family"))
        f.inequations.push_back(parse_coeff(s, declared, "inequations"));
    const json& dim = field(doc, "dim", "family");
    if (!dim.is_number_integer() || dim.get<long long>() < 1) parse_fail("dim", "expected a positive integer");
    f.table = parse_table(field(doc, "table", "family"), dim.get<std::size_t>(), declared, "table");
    const json& verified = field(doc, "verified", "family");
    if (!verified.is_boolean()) parse_fail("verified", "expected true or false");
    f.verified = verified.get<bool>();
    return f;
}

std::string render_classification_json(const Classification& c, const Algebra& a)
{
    ordered_json pivots = ordered_json::object();
    for (auto& name : c.unknowns) {
        auto it = c.linear_solution.pivots.find(intern(name));
        if (it != c.linear_solution.pivots.end()) pivots[name] = it->second.to_string();
    }
    std::vector<std::string> free;
    for (Var v : c.linear_solution.free) free.push_back(var_name(v));
    ordered_json families = ordered_json::array();
    for (auto& f : c.families) families.push_back(family_json(f));
    ordered_json doc{{"structure", c.structure},
                     {"algebra", a.name},
                     {"basis", a.basis},
                     {"unknowns", c.unknowns},
                     {"ansatz", table_json(c.ansatz)},
                     {"linear_stage", ordered_json{{"pivots", pivots}, {"free", free}, {"table", table_json(c.linear_stage)}}},
                     {"families", families}};
    return doc.dump(2) + "\n";
}

std::string render_classification_text(const Classification& c, const Algebra& a)
{
    std::string out = c.structure + " structures on " + a.name + "\n\nlinear stage, free:";
    for (Var v : c.linear_solution.free) out += " " + var_name(v);
    if (c.linear_solution.free.empty()) out += " (none)";
    out += "\n" + render_table(c.linear_stage, a.basis, ".");
    for (std::size_t i = 0; i < c.families.size(); ++i) {
        const SolutionFamily& f = c.families[i];
        out += "\nfamily " + std::to_string(i + 1) + ": " + f.label + "\n";
        out += "  free:";
        for (auto& x : f.free) out += " " + x;
        if (f.free.empty()) out += " (none)";
        out += std::string("\n  verified: ") + (f.verified ? "yes" : "no") + "\n";
        std::string table = render_table(f.table, a.basis, ".");
        std::size_t pos = 0;
        while (pos < table.size()) {
            std::size_t nl = table.find('\n', pos);
            out += "  " + table.substr(pos, nl - pos + 1);
            pos = nl + 1;
        }
    }
    return out;
}

std::string render_un_table(const std::vector<UnTableEntry>& table)
{
    std::size_t n = table.empty() ? 1 : 0;
    for (auto& e : table) n = std::max({n, e.left.i, e.left.j, e.left.k});
    std::string out;
    for (auto& e : table)
        out += "[[" + e.left.to_string(n) + ", " + e.right.to_string(n) + "]] = " + e.value.to_string() + "\n";
    return out;
}

std::string render_un_table_json(const std::vector<UnTableEntry>& table)
{
    std::size_t n = table.empty() ? 1 : 0;
    for (auto& e : table) n = std::max({n, e.left.i, e.left.j, e.left.k});
    ordered_json arr = ordered_json::array();
    for (auto& e : table) {
        ordered_json terms = ordered_json::array();
        for (auto& [idx, c] : e.value.coeffs())
            terms.push_back(ordered_json{{"i", idx.i}, {"j", idx.j}, {"k", idx.k}, {"coeff", c.to_string()}});
        arr.push_back(ordered_json{{"left", e.left.to_string(n)},
                                   {"right", e.right.to_string(n)},
                                   {"value", e.value.to_string()},
                                   {"terms", terms}});
    }
    return arr.dump(2) + "\n";
}

}  // namespace kantorkit
