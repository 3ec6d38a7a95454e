#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kantorkit/algebra.hpp"
#include "kantorkit/linalg.hpp"

namespace kantorkit {

/// A named identity expected to hold (or fail) on the listed slots,
/// optionally after fixing some parameters.
struct TagCheck {
    std::string identity;
    std::vector<std::string> slots;
    std::map<std::string, Poly> bindings;
    bool holds = true;
};

/// Kantor square of the first slot, at symbolic u unless `u` is given.
struct ExpectedSquare {
    std::string label;
    std::map<std::string, Poly> bindings;
    std::optional<Element> u;
    Multiplication table;
};

/// Basis change M taking a derived product onto a reference table.
struct IsoWitness {
    enum class Kind {
        /// Kantor square of the first slot onto the first slot of `target`.
        Square,
        /// (kantor(circ, dot), kantor(dot, circ)) onto (dot, circ) of the entry itself.
        Pair,
    };
    Kind kind = Kind::Square;
    std::string label;
    std::map<std::string, Poly> bindings;
    Element u;
    std::string target;
    Matrix M;
    std::string note;
};

/// Polynomial basis change from a symbolic table to a normal form; holds
/// wherever det M is nonzero.
struct NormalForm {
    std::string label;
    Multiplication from;
    PolyMatrix M;
    Multiplication to;
};

struct CatalogEntry {
    Algebra algebra;
    std::vector<TagCheck> tags;
    std::vector<ExpectedSquare> squares;
    std::vector<IsoWitness> witnesses;
    std::vector<NormalForm> normal_forms;
    std::vector<std::string> notes;

    bool has_tag(std::string_view identity) const;
};

/// All entries, self-tested on first use. Throws CatalogSelfTestFailed.
const std::vector<CatalogEntry>& load_catalog();

/// Throws UnknownAlgebra.
const CatalogEntry& catalog_entry(std::string_view name);

/// Re-verifies every claim of one entry; returns one line per failure.
std::vector<std::string> self_test(const CatalogEntry& entry);

/// Entries without the self-test, for inspecting a broken catalog.
std::vector<CatalogEntry> build_catalog();

/// Binds the named parameters of an algebra's slots.
std::map<Var, Poly> bindings_of(const std::map<std::string, Poly>& named);

}  // namespace kantorkit
