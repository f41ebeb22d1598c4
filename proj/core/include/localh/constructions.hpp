#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "localh/polynomial.hpp"
#include "localh/subdivision.hpp"

namespace localh {

/// Subdivision operations on a subdivision of a simplex 2^V, |V| = d.
///
///   O1   stellar subdivision of a facet                   ℓ += (0,1,...,1,0)
///   O2   push a boundary ridge into the interior         ℓ += (0,0,-1,...,-1,0,0)
///   O3   join with an edge split in two                  ℓ  = (0,ℓ,0), d += 2
///   L32  O2 followed by O1 on the new facet             ℓ += (0,1,0,...,0,1,0)
///
/// O1, O3 and L32 preserve quasi-geometricity; O2 does not.
enum class OpKind { O1, O2, O3, L32 };

std::string to_string(OpKind op);
OpKind op_from_string(const std::string& name);

struct OpStep {
    OpKind op = OpKind::O1;
    /// Face the step acts on; empty means "auto" (lexicographically smallest
    /// valid choice). Unused by O3.
    std::optional<LabelSet> face;

    friend bool operator==(const OpStep&, const OpStep&) = default;
};

/// Replayable recipe: trivial simplex on v1..v<seed_vertices>, then steps.
struct OpWord {
    std::size_t seed_vertices = 1;
    std::vector<OpStep> steps;

    friend bool operator==(const OpWord&, const OpWord&) = default;
};

/// Generated vertices share one counter per subdivision: the next index is one
/// past the largest numeric suffix of any label of the form [wzmpq]<n>.
std::size_t next_fresh_index(const Subdivision& s);

Subdivision o1_stellar(const Subdivision& s, const LabelSet& facet);
Subdivision o2_push(const Subdivision& s, const LabelSet& ridge);
Subdivision o3_join_edge(const Subdivision& s);
Subdivision lemma32_op(const Subdivision& s, const LabelSet& ridge);

/// Lexicographically smallest facet of the total complex.
LabelSet auto_facet(const Subdivision& s);
/// Faces G with |G| = |σ(G)| = d-1, i.e. valid arguments of O2 and L32,
/// in lexicographic order. Empty when d < 4.
std::vector<LabelSet> pushable_faces(const Subdivision& s);

/// Applies one step; fills in step.face when it was auto.
Subdivision apply_step(const Subdivision& s, OpStep& step);

/// Change of the local h-polynomial caused by O1, O2 or L32 on a simplex with
/// d vertices. O3 is not additive and throws.
Polynomial effect_delta(OpKind op, std::size_t d);

struct BuildResult {
    Subdivision subdivision;
    /// The recipe with every auto face resolved.
    OpWord word;
};

BuildResult replay(const OpWord& word);

/// Quasi-geometric subdivision of the simplex on d = target.size()-1 vertices
/// whose local h-vector is target. The result is re-checked (weak validity,
/// quasi-geometricity and local h); a failed check throws InternalMismatch.
BuildResult realize_local_h(const std::vector<Integer>& target);
BuildResult realize_local_h(const std::vector<long long>& target);

/// Deterministic pseudo-random word over {O1, O3, L32} starting from a simplex
/// with 1 to min(3, d_max) vertices, never exceeding d_max base vertices.
BuildResult random_subdivision(std::uint64_t seed, std::size_t d_max, std::size_t steps);

}  // namespace localh
