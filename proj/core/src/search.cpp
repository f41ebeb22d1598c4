#include "localh/search.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "localh/cwbary.hpp"

namespace localh {

Subdivision search_instance(std::uint64_t seed, std::size_t max_d, std::size_t steps, bool barycentric) {
    Subdivision s = random_subdivision(seed, max_d, steps).subdivision;
    return barycentric ? sd_subdivision(s) : s;
}

namespace {

std::pair<SearchRecord, Subdivision> evaluate(std::uint64_t seed, std::size_t max_d, std::size_t steps,
                                              bool barycentric) {
    BuildResult built = random_subdivision(seed, max_d, steps);
    Subdivision s = barycentric ? sd_subdivision(built.subdivision) : built.subdivision;
    SearchRecord r;
    r.seed = seed;
    r.max_d = max_d;
    r.steps = steps;
    r.barycentric = barycentric;
    r.word = std::move(built.word);
    r.d = s.base().num_vertices();
    r.local_h = local_h(s);
    if (is_symmetric(r.local_h, r.d)) r.gamma = gamma_extract(r.local_h, r.d);
    r.quasi_geometric = is_quasi_geometric(s).holds;
    r.vertex_induced = is_vertex_induced(s).holds;
    r.unimodal = is_unimodal(r.local_h.padded(r.d + 1));
    return {std::move(r), std::move(s)};
}

}  // namespace

SearchRecord search_one(std::uint64_t seed, std::size_t max_d, std::size_t steps, bool barycentric) {
    return evaluate(seed, max_d, steps, barycentric).first;
}

void run_search(const SearchOptions& options,
                const std::function<void(const SearchRecord&, const Subdivision&)>& sink) {
    struct Slot {
        bool done = false;
        std::optional<SearchRecord> record;
        std::optional<Subdivision> instance;
        std::exception_ptr error;
    };
    const std::size_t n = options.count;
    std::vector<Slot> slots(n);
    std::mutex mutex;
    std::condition_variable ready;
    std::atomic<std::size_t> next{0};

    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            Slot slot;
            try {
                const std::uint64_t seed = options.seed + i;
                auto [record, instance] = evaluate(seed, options.max_d, options.steps, options.barycentric);
                if (!options.require_vertex_induced || record.vertex_induced) slot.instance = std::move(instance);
                slot.record = std::move(record);
            } catch (...) {
                slot.error = std::current_exception();
            }
            slot.done = true;
            std::lock_guard lock(mutex);
            slots[i] = std::move(slot);
            ready.notify_all();
        }
    };

    unsigned workers = options.workers != 0 ? options.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
    std::vector<std::jthread> pool;
    if (workers > 1)
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    if (workers == 1) work();

    std::exception_ptr first_error;
    for (std::size_t i = 0; i < n; ++i) {
        Slot slot;
        {
            std::unique_lock lock(mutex);
            ready.wait(lock, [&] { return slots[i].done; });
            slot = std::move(slots[i]);
        }
        if (slot.error) {
            if (!first_error) first_error = slot.error;
            continue;
        }
        if (first_error || !slot.instance) continue;
        sink(*slot.record, *slot.instance);
    }
    pool.clear();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace localh
