#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "localh/constructions.hpp"

namespace localh {

/// One corpus instance of the vertex-induced unimodality search.
struct SearchRecord {
    std::uint64_t seed = 0;
    std::size_t max_d = 0;
    std::size_t steps = 0;
    bool barycentric = false;  // the instance is sd of the generated subdivision
    OpWord word;
    std::size_t d = 0;
    Polynomial local_h;
    std::optional<GammaVector> gamma;
    bool quasi_geometric = false;
    bool vertex_induced = false;
    bool unimodal = false;

    /// Vertex-induced with a non-unimodal local h-vector.
    bool conjecture_relevant() const { return vertex_induced && !unimodal; }
};

struct SearchOptions {
    std::uint64_t seed = 0;
    std::size_t count = 100;
    std::size_t max_d = 5;
    std::size_t steps = 6;
    bool barycentric = false;
    bool require_vertex_induced = false;
    /// 0 means one per hardware thread.
    unsigned workers = 0;
};

/// Rebuilds the instance a record describes.
Subdivision search_instance(std::uint64_t seed, std::size_t max_d, std::size_t steps, bool barycentric);
SearchRecord search_one(std::uint64_t seed, std::size_t max_d, std::size_t steps, bool barycentric);

/// Evaluates seeds seed..seed+count-1 on a worker pool and hands records to
/// the sink in seed order, together with the instance.
void run_search(const SearchOptions& options,
                const std::function<void(const SearchRecord&, const Subdivision&)>& sink);

}  // namespace localh
