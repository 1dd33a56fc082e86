#include "zcp/seedsearch.hpp"

#include "zcp/correlation.hpp"
#include "zcp/threads.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace zcp {

bool verify_floor(const sequence& a, const sequence& b) {
    if (b.size() != a.size() + 1) return false;
    for (std::int64_t tau = 1; tau <= a.size(); ++tau) {
        auto s = aacf(a, tau) + aacf(b, tau);
        if (s != 1 && s != -1) return false;
    }
    return true;
}

std::pair<std::string, std::string> canonical_form(const sequence& a, const sequence& b) {
    auto best = std::make_pair(a.str(), b.str());
    for (int rev = 0; rev < 2; ++rev) {
        sequence x = rev ? reverse(a) : a;
        sequence y = rev ? reverse(b) : b;
        for (int na = 0; na < 2; ++na) {
            sequence xs = na ? negate(x) : x;
            for (int nb = 0; nb < 2; ++nb) {
                auto cand = std::make_pair(xs.str(), (nb ? negate(y) : y).str());
                if (cand < best) best = std::move(cand);
            }
        }
    }
    return best;
}

namespace {

// One element of either member, identified by member and index. The assignment
// order alternates member and end (a front, b front, a back, b back, one step
// inward per round) so extreme shifts complete, and can prune, early.
struct slot_ref {
    bool in_b;
    int index;
};

std::vector<slot_ref> assignment_order(int n) {
    std::vector<slot_ref> order;
    order.reserve(2 * n + 1);
    int alo = 0, ahi = n - 1, blo = 0, bhi = n;
    while (alo <= ahi || blo <= bhi) {
        if (alo <= ahi) order.push_back({false, alo});
        if (blo <= bhi) order.push_back({true, blo});
        if (alo < ahi) order.push_back({false, ahi});
        if (blo < bhi) order.push_back({true, bhi});
        ++alo;
        --ahi;
        ++blo;
        --bhi;
    }
    return order;
}

// A product c_i * c_{i+tau} contributing to the shift-tau sum, attached to
// whichever endpoint the assignment order reaches second.
struct completion {
    int other_pos;
    int tau;
};

struct search_plan {
    int n = 0;
    std::vector<slot_ref> order;
    std::vector<int> pos_a, pos_b;                   // element -> order position
    std::vector<std::vector<completion>> completions;  // order position -> products closed there
    std::vector<int> initial_remaining;              // tau -> open product count at the root
};

search_plan build_plan(int n) {
    search_plan plan;
    plan.n = n;
    plan.order = assignment_order(n);
    plan.pos_a.assign(n, 0);
    plan.pos_b.assign(n + 1, 0);
    const int slots = 2 * n + 1;
    for (int p = 0; p < slots; ++p) {
        const auto& s = plan.order[p];
        (s.in_b ? plan.pos_b[s.index] : plan.pos_a[s.index]) = p;
    }
    plan.completions.assign(slots, {});
    plan.initial_remaining.assign(n + 1, 0);
    auto add = [&](int pi, int pj, int tau) {
        int later = std::max(pi, pj);
        int earlier = std::min(pi, pj);
        plan.completions[later].push_back({earlier, tau});
        ++plan.initial_remaining[tau];
    };
    for (int tau = 1; tau <= n; ++tau) {
        for (int i = 0; i + tau < n; ++i) add(plan.pos_a[i], plan.pos_a[i + tau], tau);
        for (int i = 0; i + tau < n + 1; ++i) add(plan.pos_b[i], plan.pos_b[i + tau], tau);
    }
    return plan;
}

struct checkpoint_state {
    int prefix_bits = 0;
    std::uint64_t count = 0;
    std::uint64_t nodes = 0;
    std::vector<std::uint64_t> done;
    std::vector<seq_pair> pairs;
};

constexpr const char* checkpoint_magic = "zcp-seed-checkpoint v1";

std::optional<checkpoint_state> load_checkpoint(const std::string& path, int n, bool canonicalize) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || line != checkpoint_magic)
        throw std::runtime_error("unrecognized checkpoint header in " + path);
    checkpoint_state cs;
    bool saw_n = false, saw_canon = false, saw_bits = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "n") {
            int v;
            ls >> v;
            saw_n = true;
            if (v != n) throw std::runtime_error("checkpoint was written for a different seed length");
        } else if (key == "canonicalize") {
            int v;
            ls >> v;
            saw_canon = true;
            if ((v != 0) != canonicalize)
                throw std::runtime_error("checkpoint was written for a different symmetry setting");
        } else if (key == "prefix_bits") {
            ls >> cs.prefix_bits;
            saw_bits = true;
        } else if (key == "count") {
            ls >> cs.count;
        } else if (key == "nodes") {
            ls >> cs.nodes;
        } else if (key == "done") {
            std::uint64_t id;
            ls >> id;
            cs.done.push_back(id);
        } else if (key == "pair") {
            std::string sa, sb;
            ls >> sa >> sb;
            cs.pairs.push_back({sequence::parse(sa), sequence::parse(sb)});
        } else {
            throw std::runtime_error("unrecognized checkpoint entry '" + key + "'");
        }
    }
    if (!saw_n || !saw_canon || !saw_bits)
        throw std::runtime_error("checkpoint is missing required fields");
    return cs;
}

void save_checkpoint(const std::string& path, int n, bool canonicalize, int prefix_bits,
                     const std::vector<std::uint64_t>& done, const std::vector<seq_pair>& pairs,
                     std::uint64_t count, std::uint64_t nodes) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint file " + tmp);
        out << checkpoint_magic << '\n';
        out << "n " << n << '\n';
        out << "canonicalize " << (canonicalize ? 1 : 0) << '\n';
        out << "prefix_bits " << prefix_bits << '\n';
        out << "count " << count << '\n';
        out << "nodes " << nodes << '\n';
        for (auto id : done) out << "done " << id << '\n';
        for (const auto& p : pairs) out << "pair " << p.first.str() << ' ' << p.second.str() << '\n';
        if (!out) throw std::runtime_error("cannot write checkpoint file " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot replace checkpoint file " + path);
}

struct shared_state {
    std::atomic<std::uint64_t> next_subtree{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> deadline_hit{false};

    bool has_deadline = false;
    std::chrono::steady_clock::time_point deadline;

    bool has_cap = false;
    std::uint64_t cap = 0;
    search_mode mode = search_mode::enumerate_all;
    bool canonicalize = true;

    std::mutex merge_mutex;
    std::uint64_t emitted = 0;  // global emission count, gated by cap / first-hit
    std::vector<std::uint64_t> done_ids;
    std::vector<seq_pair> done_pairs;
    std::uint64_t done_count = 0;
    std::uint64_t done_nodes = 0;
    std::vector<seq_pair> partial_pairs;
    std::uint64_t partial_count = 0;
    std::uint64_t partial_nodes = 0;
};

class subtree_runner {
public:
    subtree_runner(const search_plan& plan, shared_state& sh)
        : plan_(plan),
          sh_(sh),
          slots_(2 * plan.n + 1),
          val_(slots_, 0),
          forced_(slots_, 0),
          sums_(plan.n + 1, 0),
          remaining_(plan.initial_remaining) {}

    void set_forced(int order_pos, int value) { forced_[order_pos] = static_cast<std::int8_t>(value); }

    // Runs one subtree to completion. Returns false if stopped mid-way.
    bool run() {
        aborted_ = false;
        dfs(0);
        return !aborted_;
    }

    std::uint64_t nodes = 0;
    std::vector<seq_pair> found;
    std::uint64_t found_count = 0;

private:
    void dfs(int p) {
        if (p == slots_) {
            emit_leaf();
            return;
        }
        for (int v : {1, -1}) {
            if (forced_[p] != 0 && forced_[p] != v) continue;
            ++nodes;
            if ((nodes & 0x1fff) == 0 && should_stop()) aborted_ = true;
            if (aborted_) return;
            bool viable = true;
            val_[p] = static_cast<std::int8_t>(v);
            for (const auto& c : plan_.completions[p]) {
                int s = (sums_[c.tau] += v * val_[c.other_pos]);
                if (--remaining_[c.tau] + 1 < std::abs(s)) viable = false;
            }
            if (viable) dfs(p + 1);
            for (const auto& c : plan_.completions[p]) {
                sums_[c.tau] -= v * val_[c.other_pos];
                ++remaining_[c.tau];
            }
            if (aborted_) return;
        }
    }

    bool should_stop() {
        if (sh_.stop.load(std::memory_order_relaxed)) return true;
        if (sh_.has_deadline && std::chrono::steady_clock::now() >= sh_.deadline) {
            sh_.deadline_hit.store(true, std::memory_order_relaxed);
            sh_.stop.store(true, std::memory_order_relaxed);
            return true;
        }
        return false;
    }

    void emit_leaf() {
        const int n = plan_.n;
        std::vector<int> av(n), bv(n + 1);
        for (int i = 0; i < n; ++i) av[i] = val_[plan_.pos_a[i]];
        for (int i = 0; i <= n; ++i) bv[i] = val_[plan_.pos_b[i]];
        sequence a(av), b(bv);
        // Every leaf the pruning admits must satisfy the floor; cross-check
        // against the correlation oracle rather than trusting the bookkeeping.
        if (!verify_floor(a, b))
            throw std::logic_error("search emitted a pair that fails the floor oracle");
        if (sh_.canonicalize && canonical_form(a, b) != std::make_pair(a.str(), b.str())) return;

        std::lock_guard<std::mutex> lock(sh_.merge_mutex);
        if (sh_.has_cap && sh_.emitted >= sh_.cap) {
            sh_.stop.store(true, std::memory_order_relaxed);
            aborted_ = true;
            return;
        }
        ++sh_.emitted;
        ++found_count;
        if (sh_.mode != search_mode::count_only) found.push_back({a, b});
        if (sh_.mode == search_mode::first_hit || (sh_.has_cap && sh_.emitted >= sh_.cap)) {
            sh_.stop.store(true, std::memory_order_relaxed);
            aborted_ = true;
        }
    }

    const search_plan& plan_;
    shared_state& sh_;
    int slots_;
    std::vector<std::int8_t> val_;
    std::vector<std::int8_t> forced_;
    std::vector<int> sums_;
    std::vector<int> remaining_;
    bool aborted_ = false;
};

void run_worker(const search_plan& plan, shared_state& sh, int prefix_bits, bool canonicalize,
                std::uint64_t total_subtrees, std::exception_ptr& error, std::mutex& error_mutex) {
    try {
        subtree_runner runner(plan, sh);
        while (!sh.stop.load(std::memory_order_relaxed)) {
            std::uint64_t id = sh.next_subtree.fetch_add(1, std::memory_order_relaxed);
            if (id >= total_subtrees) break;
            {
                std::lock_guard<std::mutex> lock(sh.merge_mutex);
                if (std::find(sh.done_ids.begin(), sh.done_ids.end(), id) != sh.done_ids.end())
                    continue;  // completed by a previous checkpointed run
            }
            subtree_runner fresh(plan, sh);
            if (canonicalize) {
                fresh.set_forced(plan.pos_a[0], 1);
                fresh.set_forced(plan.pos_b[0], 1);
            }
            // Subtree id bits preassign the first free elements of the shorter
            // member, most significant bit first, '+' for 0.
            for (int j = 0; j < prefix_bits; ++j) {
                int elem = canonicalize ? j + 1 : j;
                int bit = static_cast<int>((id >> (prefix_bits - 1 - j)) & 1);
                fresh.set_forced(plan.pos_a[elem], bit ? -1 : 1);
            }
            bool completed = fresh.run();
            std::lock_guard<std::mutex> lock(sh.merge_mutex);
            if (completed) {
                sh.done_ids.push_back(id);
                sh.done_nodes += fresh.nodes;
                sh.done_count += fresh.found_count;
                sh.done_pairs.insert(sh.done_pairs.end(), fresh.found.begin(), fresh.found.end());
            } else {
                sh.partial_nodes += fresh.nodes;
                sh.partial_count += fresh.found_count;
                sh.partial_pairs.insert(sh.partial_pairs.end(), fresh.found.begin(), fresh.found.end());
                break;
            }
        }
    } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        sh.stop.store(true, std::memory_order_relaxed);
    }
}

int ceil_log2(std::uint64_t v) {
    int bits = 0;
    while ((1ull << bits) < v) ++bits;
    return bits;
}

}  // namespace

search_result search_seeds(const search_task& task) {
    if (task.n < 1) throw std::invalid_argument("seed length must be positive");
    if (task.n > 30) throw std::invalid_argument("seed length beyond exhaustive reach");
    const auto t0 = std::chrono::steady_clock::now();
    const int n = task.n;

    // First-hit stays single-threaded so "first" is the deterministic DFS order.
    int threads = task.mode == search_mode::first_hit ? 1 : thread_count(task.threads);
    const int free_a = task.canonicalize ? n - 1 : n;
    int prefix_bits = 0;
    if (threads > 1 && free_a > 0)
        prefix_bits = std::min({free_a, 10, ceil_log2(static_cast<std::uint64_t>(threads)) + 2});

    shared_state sh;
    sh.mode = task.mode;
    sh.canonicalize = task.canonicalize;
    if (task.max_results) {
        sh.has_cap = true;
        sh.cap = *task.max_results;
    }
    if (task.mode == search_mode::first_hit && !sh.has_cap) {
        sh.has_cap = true;
        sh.cap = 1;
    }
    if (task.time_budget_s) {
        sh.has_deadline = true;
        sh.deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                               std::chrono::duration<double>(*task.time_budget_s));
    }

    std::uint64_t pre_count = 0, pre_nodes = 0;
    std::vector<seq_pair> pre_pairs;  // carried over from a checkpointed run
    if (task.checkpoint_path) {
        if (auto cs = load_checkpoint(*task.checkpoint_path, n, task.canonicalize)) {
            prefix_bits = cs->prefix_bits;
            sh.done_ids = std::move(cs->done);
            pre_count = cs->count;
            pre_nodes = cs->nodes;
            pre_pairs = std::move(cs->pairs);
            sh.emitted = pre_count;
        }
    }
    const std::uint64_t total_subtrees = 1ull << prefix_bits;

    const search_plan plan = build_plan(n);

    std::exception_ptr error;
    std::mutex error_mutex;
    if (threads == 1) {
        run_worker(plan, sh, prefix_bits, task.canonicalize, total_subtrees, error, error_mutex);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int i = 0; i < threads; ++i)
            pool.emplace_back(run_worker, std::cref(plan), std::ref(sh), prefix_bits,
                              task.canonicalize, total_subtrees, std::ref(error), std::ref(error_mutex));
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);

    search_result result;
    result.nodes_visited = pre_nodes + sh.done_nodes + sh.partial_nodes;
    const bool all_done = sh.done_ids.size() == total_subtrees;
    const bool capped = sh.has_cap && sh.emitted >= sh.cap && task.mode != search_mode::first_hit;
    result.exhausted = all_done && !capped;
    if (task.mode == search_mode::first_hit)
        result.exhausted = sh.emitted > 0 || all_done;  // a hit answers the query outright

    // Snapshot the resumable portion before pre_pairs is consumed below. Finds
    // from an interrupted subtree are returned but never checkpointed; the
    // subtree reruns in full on resume, so nothing is lost or double-counted.
    if (task.checkpoint_path && !result.exhausted) {
        std::vector<seq_pair> keep = pre_pairs;
        keep.insert(keep.end(), sh.done_pairs.begin(), sh.done_pairs.end());
        save_checkpoint(*task.checkpoint_path, n, task.canonicalize, prefix_bits, sh.done_ids, keep,
                        pre_count + sh.done_count, pre_nodes + sh.done_nodes);
    }

    if (task.mode == search_mode::count_only) {
        result.count = pre_count + sh.done_count + sh.partial_count;
    } else {
        result.pairs = std::move(pre_pairs);
        result.pairs.insert(result.pairs.end(), sh.done_pairs.begin(), sh.done_pairs.end());
        result.pairs.insert(result.pairs.end(), sh.partial_pairs.begin(), sh.partial_pairs.end());
        auto key_less = [](const seq_pair& l, const seq_pair& r) {
            return std::make_pair(l.first.str(), l.second.str()) <
                   std::make_pair(r.first.str(), r.second.str());
        };
        std::sort(result.pairs.begin(), result.pairs.end(), key_less);
        result.pairs.erase(std::unique(result.pairs.begin(), result.pairs.end()), result.pairs.end());
        result.count = result.pairs.size();
    }

    if (task.checkpoint_path && result.exhausted && task.mode != search_mode::first_hit)
        std::remove(task.checkpoint_path->c_str());

    result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

}  // namespace zcp
