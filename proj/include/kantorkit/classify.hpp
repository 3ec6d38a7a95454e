#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kantorkit/algebra.hpp"
#include "kantorkit/identities.hpp"
#include "kantorkit/linalg.hpp"

namespace kantorkit {

/// One branch of a classification.
struct SolutionFamily {
    std::string label;
    /// All unknowns of the ansatz, in ansatz order.
    std::vector<std::string> unknowns;
    /// Unknowns fixed on this branch, as polynomials in the remaining ones.
    std::map<std::string, Poly> assignment;
    /// Unknowns that are neither assigned nor the leading variable of an equation.
    std::vector<std::string> free;
    /// Residual equations. Equations linear in a leading unknown whose
    /// coefficient is among the inequations are solved triangularly.
    std::vector<Poly> equations;
    /// Leading unknown of each equation, empty for unsolved residuals.
    std::vector<std::string> leading;
    /// Polynomials asserted nonzero on this branch.
    std::vector<Poly> inequations;
    /// Ansatz tensor with the assignment applied.
    Multiplication table;
    /// True when every defining identity reduces to zero on the branch.
    bool verified = false;
};

/// Branch-on-linear-occurrence triangular decomposition over Q.
/// Equations left unsolved at max_depth are kept as residuals.
std::vector<SolutionFamily> case_split_solve(const std::vector<Poly>& equations, const std::vector<Var>& unknowns,
                                             std::size_t max_depth = 16);

/// Result of a two-stage classification.
struct Classification {
    std::string structure;
    std::vector<std::string> unknowns;
    /// Ansatz before any constraint.
    Multiplication ansatz;
    /// Ansatz after the exact linear stage.
    Multiplication linear_stage;
    LinearSolution linear_solution;
    std::vector<SolutionFamily> families;
};

struct ClassifyOptions {
    std::size_t max_depth = 16;
    /// Impose the linear stage only at this vector instead of for all u.
    std::optional<Element> fixed_u;
};

/// Lie brackets l with [u, xy] = [u, x]y + x[u, y].
Classification poisson_structures(const Algebra& a, const ClassifyOptions& options = {});
/// Anticommutative l with the Leibniz rule only.
Classification generic_poisson_structures(const Algebra& a, const ClassifyOptions& options = {});
/// Commutative products on the Lie algebra l satisfying both post-Lie identities.
/// Throws LieCheckFailed when require_lie is set and l is not Lie.
Classification postlie_structures(const Algebra& l, bool require_lie = true, const ClassifyOptions& options = {});

/// Unknown names: "g{p}_{k}" with p the 1-based pair index.
std::string unknown_name(std::size_t pair, std::size_t k);

/// Random rational point on a family: free unknowns drawn from the
/// generator, triangular equations solved in order. nullopt when the
/// draw violates an inequation or a residual cannot be solved.
std::optional<std::map<Var, Rational>> sample_family(const SolutionFamily& f,
                                                    const std::function<Rational()>& draw);

/// Checks a family against a specification by reduction modulo its
/// triangular equations. `fixed` are the known operations, the family's
/// table is inserted at `slot`.
bool verify_family(const SolutionFamily& f, std::vector<Multiplication> fixed, std::size_t slot,
                   const IdentitySpec& spec);

}  // namespace kantorkit
