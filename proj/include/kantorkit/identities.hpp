#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "kantorkit/algebra.hpp"

namespace kantorkit {

/// Binary product tree over variables x0, x1, ... and operation slots.
class ProductTree {
public:
    static ProductTree variable(std::size_t index);
    static ProductTree product(std::size_t slot, ProductTree left, ProductTree right);

    bool is_variable() const { return node_->slot == npos; }
    std::size_t variable_index() const { return node_->var; }
    std::size_t slot() const { return node_->slot; }
    const ProductTree& left() const { return node_->children->first; }
    const ProductTree& right() const { return node_->children->second; }

    std::size_t max_variable() const;
    std::size_t max_slot() const;  // npos for a bare variable
    ProductTree with_slot_map(const std::vector<std::size_t>& map) const;

    /// Text form: slot 0 by juxtaposition, slot 1 as [a,b].
    std::string to_string(std::string_view letters = "xyztw") const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    struct Node {
        std::size_t var = 0;
        std::size_t slot = npos;
        std::shared_ptr<const std::pair<ProductTree, ProductTree>> children;
    };
    explicit ProductTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Formal linear combination of product trees; an identity states that it vanishes.
using Relation = std::vector<std::pair<Rational, ProductTree>>;

struct IdentitySpec {
    std::string name;
    std::size_t variables = 0;
    std::size_t slots = 0;
    /// All relations must vanish; single identities have one.
    std::vector<Relation> relations;
};

/// Parses relations with products by juxtaposition
/// in slot 0, "[a,b]", "{a,b}" or "<a,b>" for slot 1, powers "x^2"
/// (left-normed), rational coefficients and an optional "=".
/// Variables are single letters taken from `letters` in that order.
IdentitySpec parse_identity(std::string name, const std::vector<std::string>& relations,
                            std::string_view letters = "xyztw");

/// Names of the built-in identities and bundles.
std::vector<std::string> builtin_names();
/// Throws Error(UnknownIdentity).
IdentitySpec builtin(std::string_view name);
/// Moves a single-operation spec onto operation `slot`.
IdentitySpec on_slot(const IdentitySpec& spec, std::size_t slot);
/// Conjunction of several specs.
IdentitySpec bundle(std::string name, const std::vector<IdentitySpec>& parts);

struct Verdict {
    bool holds = true;
    /// Nonzero coefficients of the generic expansion, in the parameters only.
    std::vector<Poly> obstructions;
};

Element evaluate_tree(const std::vector<Multiplication>& mults, const ProductTree& tree,
                      const std::vector<Element>& values);
Element evaluate_relation(const std::vector<Multiplication>& mults, const Relation& relation,
                          const std::vector<Element>& values);

/// Expands every relation at generic elements and collects obstructions.
/// Throws SlotMismatch or DimMismatch.
Verdict check_identity(const std::vector<Multiplication>& mults, const IdentitySpec& spec);
Verdict check_identity(const Multiplication& m, const IdentitySpec& spec);

/// lhs and rhs agree modulo the subspace `ann` at generic elements.
/// Throws SymbolicCoefficient when a difference has non-rational coordinates.
Verdict check_ann_equality(const std::vector<Multiplication>& mults, const IdentitySpec& lhs,
                           const IdentitySpec& rhs, const Subspace& ann);

struct ProbeResult {
    std::string property;  // "CB" or "CL"
    std::vector<std::size_t> probes;
    bool pass = true;
};

/// Commutative bonding on probe pairs and centralizer closure per probe.
/// Sampled checks, not a proof of the CB or CL property.
std::vector<ProbeResult> probe_cb_cl(const Multiplication& m, const std::vector<Element>& probes);

}  // namespace kantorkit
