#include "brownlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

#include "brownlab/bounds.hpp"
#include "brownlab/errors.hpp"

namespace brownlab {

namespace {

using Clock = std::chrono::steady_clock;

// Incremental window-condition state for every color class. Appending position p
// to a class only creates windows that end at p; grouped by gap size, the longest
// such window for each level is determined by a stack of suffix-maximum gaps, so
// each extension costs O(#distinct gaps in the class).
class BrownRule {
public:
    BrownRule(const GrowthFn& f, Color r, std::size_t n_cap) : classes_(r) {
        thresholds_.resize(n_cap + 1);
        for (std::size_t d = 0; d <= n_cap; ++d) thresholds_[d] = f(d);
    }

    bool push(std::uint64_t p, Color c) {
        if (thresholds_.size() < 2 || thresholds_[1] < 1) return false;  // singletons large
        ClassState& k = classes_[c];
        if (k.elems.empty()) {
            k.elems.push_back(p);
            frames_.push_back({c, 0});
            return true;
        }
        const std::uint64_t gap = p - k.elems.back();
        const auto m = static_cast<std::uint32_t>(k.elems.size());
        std::uint32_t popped = 0;
        while (!k.stack.empty() && k.stack.back().gap <= gap) {
            undo_.push_back(k.stack.back());
            k.stack.pop_back();
            ++popped;
        }
        k.stack.push_back({gap, m});
        k.elems.push_back(p);
        frames_.push_back({c, popped});

        // Level t has gap size stack[t].gap; its longest window ending at p starts
        // right at the previous (larger) suffix maximum.
        for (std::size_t t = k.stack.size(); t-- > 0;) {
            const std::uint32_t start = t > 0 ? k.stack[t - 1].idx : 0;
            const std::uint64_t len = m - start + 1;
            if (len > thresholds_[k.stack[t].gap]) {
                pop();
                return false;
            }
        }
        return true;
    }

    void pop() {
        const Frame fr = frames_.back();
        frames_.pop_back();
        ClassState& k = classes_[fr.color];
        const bool had_gap = k.elems.size() >= 2;
        k.elems.pop_back();
        if (!had_gap) return;
        k.stack.pop_back();
        for (std::uint32_t i = 0; i < fr.popped; ++i) {
            k.stack.push_back(undo_.back());
            undo_.pop_back();
        }
    }

private:
    struct Level {
        std::uint64_t gap;
        std::uint32_t idx;  // the gap lies between elements idx-1 and idx
    };
    struct ClassState {
        std::vector<std::uint64_t> elems;
        std::vector<Level> stack;  // gaps strictly decreasing toward the top
    };
    struct Frame {
        Color color;
        std::uint32_t popped;
    };

    std::vector<std::uint64_t> thresholds_;
    std::vector<ClassState> classes_;
    std::vector<Level> undo_;
    std::vector<Frame> frames_;
};

class VdwRule {
public:
    explicit VdwRule(std::size_t l) : l_(l) {}

    bool push(std::uint64_t p, Color c) {
        if (l_ <= 1) return false;
        for (std::uint64_t diff = 1; (l_ - 1) * diff <= p; ++diff) {
            std::size_t k = 1;
            while (k < l_ && colors_[p - k * diff] == c) ++k;
            if (k == l_) return false;
        }
        colors_.push_back(c);
        return true;
    }

    void pop() { colors_.pop_back(); }

private:
    std::size_t l_;
    std::vector<Color> colors_;
};

struct Shared {
    Budget budget;
    Clock::time_point start = Clock::now();
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> exhausted{false};
    std::atomic<bool> cap_hit{false};
};

struct Prefix {
    std::vector<Color> colors;
    Color used = 0;
};

template <class Rule>
class Dfs {
public:
    Dfs(Rule rule, Color r, std::size_t n_cap, bool canon, Shared& shared)
        : rule_(std::move(rule)), r_(r), n_cap_(n_cap), canon_(canon), shared_(shared) {}

    // Explores below the current prefix; with frontier_depth set, prefixes of that
    // length are collected instead of explored.
    void run(std::optional<std::size_t> frontier_depth = std::nullopt) {
        frontier_depth_ = frontier_depth;
        descend(used_);
    }

    bool replay(const Prefix& prefix) {
        for (std::size_t p = 0; p < prefix.colors.size(); ++p) {
            if (!rule_.push(p, prefix.colors[p])) return false;
            colors_.push_back(prefix.colors[p]);
        }
        used_ = prefix.used;
        best_ = colors_;
        return true;
    }

    const std::vector<Color>& best() const { return best_; }
    std::vector<Prefix>& frontier() { return frontier_; }

private:
    void descend(Color used) {
        const std::size_t p = colors_.size();
        if (p == n_cap_) {
            shared_.cap_hit = true;
            shared_.stop = true;
            return;
        }
        if (frontier_depth_ && p == *frontier_depth_) {
            frontier_.push_back({colors_, used});
            return;
        }
        const Color top = canon_ ? std::min<Color>(r_ - 1, used) : r_ - 1;
        for (Color c = 0; c <= top; ++c) {
            if (shared_.stop.load(std::memory_order_relaxed) || !tick()) return;
            if (!rule_.push(p, c)) continue;
            colors_.push_back(c);
            if (colors_.size() > best_.size()) best_ = colors_;
            descend(std::max<Color>(used, c + 1));
            rule_.pop();
            colors_.pop_back();
        }
    }

    bool tick() {
        const auto n = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (shared_.budget.max_nodes && n > *shared_.budget.max_nodes) return exhaust();
        if (shared_.budget.max_time && (++local_ & 1023U) == 0 &&
            Clock::now() - shared_.start > *shared_.budget.max_time) {
            return exhaust();
        }
        return true;
    }

    bool exhaust() {
        shared_.exhausted = true;
        shared_.stop = true;
        return false;
    }

    Rule rule_;
    Color r_;
    std::size_t n_cap_;
    bool canon_;
    Shared& shared_;
    std::vector<Color> colors_;
    std::vector<Color> best_;
    Color used_ = 0;
    std::optional<std::size_t> frontier_depth_;
    std::vector<Prefix> frontier_;
    std::uint64_t local_ = 0;
};

struct RawResult {
    std::vector<Color> best;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    bool cap_hit = false;
    std::chrono::duration<double> wall{};
};

template <class MakeRule>
RawResult run_search(MakeRule make_rule, Color r, std::size_t n_cap, const Budget& budget,
                     bool canon, unsigned jobs, std::size_t split_depth) {
    Shared shared;
    shared.budget = budget;
    using Rule = decltype(make_rule());
    RawResult out;

    if (jobs <= 1) {
        Dfs<Rule> dfs(make_rule(), r, n_cap, canon, shared);
        dfs.run();
        out.best = dfs.best();
    } else {
        const std::size_t depth = std::min(n_cap, split_depth ? split_depth : std::size_t{8});
        Dfs<Rule> seed(make_rule(), r, n_cap, canon, shared);
        seed.run(depth);
        out.best = seed.best();
        auto& frontier = seed.frontier();

        std::vector<std::vector<Color>> results(frontier.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < frontier.size();) {
                if (shared.stop) return;
                Dfs<Rule> dfs(make_rule(), r, n_cap, canon, shared);
                if (!dfs.replay(frontier[i])) continue;
                dfs.run();
                results[i] = dfs.best();
            }
        };
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        // Frontier order is lexicographic, so the first deepest result is the least.
        for (auto& res : results) {
            if (res.size() > out.best.size()) out.best = std::move(res);
        }
    }
    out.nodes = shared.nodes;
    out.exhausted = shared.exhausted;
    out.cap_hit = shared.cap_hit;
    out.wall = Clock::now() - shared.start;
    return out;
}

void fill_common(SearchOutcome& o, RawResult& raw, Color r) {
    o.nodes = raw.nodes;
    o.wall_time = raw.wall;
    o.budget_exhausted = raw.exhausted;
    o.reached_cap = raw.cap_hit;
    o.lower = raw.best.size() + 1;
    o.witness = Coloring(r, std::move(raw.best));
    if (!raw.exhausted && !raw.cap_hit) {
        o.kind = OutcomeKind::Exact;
        o.value = o.lower;
        o.upper = BigNat(o.value);
    }
}

}  // namespace

SearchOutcome brown_number(const GrowthFn& f, Color r, const SearchOptions& opts) {
    if (r == 0) throw InvalidArgument("palette r must be >= 1");
    const GrowthFn g = f.nondecreasing() ? f : GrowthFn::closure(f);
    auto raw = run_search([&] { return BrownRule(g, r, opts.n_cap); }, r, opts.n_cap,
                          opts.budget, opts.canonicalize, opts.jobs, opts.split_depth);
    SearchOutcome o;
    o.used_closure = !f.nondecreasing();
    fill_common(o, raw, r);
    o.certificate = is_witness(o.witness, g);
    if (o.kind == OutcomeKind::Bracketed) {
        try {
            o.upper = upper_bound_seq(g, r).value;
        } catch (const MagnitudeOverflow&) {
        }
        const auto kind = f.kind();
        if (kind == GrowthFn::Kind::Linear || kind == GrowthFn::Kind::Identity) {
            try {
                const BigNat ardal = ardal_bound(f.slope(), r);
                if (!o.upper || ardal < *o.upper) o.upper = ardal;
            } catch (const MagnitudeOverflow&) {
            }
        }
    }
    return o;
}

SearchOutcome vdw_number(Color r, std::size_t l, const SearchOptions& opts) {
    if (r == 0 || l == 0) throw InvalidArgument("vdw_number needs r >= 1 and l >= 1");
    auto raw = run_search([&] { return VdwRule(l); }, r, opts.n_cap, opts.budget,
                          opts.canonicalize, opts.jobs, opts.split_depth);
    SearchOutcome o;
    fill_common(o, raw, r);
    return o;
}

namespace {

template <class MakeRule>
NoWitnessReport confirm(MakeRule make_rule, std::size_t n, Color r, const Budget& budget,
                        bool canon) {
    const auto raw = run_search(make_rule, r, n, budget, canon, 1, 0);
    NoWitnessReport rep;
    rep.nodes = raw.nodes;
    if (raw.cap_hit) {
        rep.result = NoWitnessResult::WitnessExists;
    } else if (raw.exhausted) {
        rep.result = NoWitnessResult::Indeterminate;
    } else {
        rep.result = NoWitnessResult::NoWitness;
    }
    return rep;
}

}  // namespace

NoWitnessReport confirm_no_witness(std::size_t n, const GrowthFn& f, Color r,
                                   const Budget& budget, bool canonicalize) {
    require_nondecreasing(f);
    if (r == 0) throw InvalidArgument("palette r must be >= 1");
    return confirm([&] { return BrownRule(f, r, n); }, n, r, budget, canonicalize);
}

NoWitnessReport confirm_no_ap_free(std::size_t n, Color r, std::size_t l, const Budget& budget,
                                   bool canonicalize) {
    if (r == 0 || l == 0) throw InvalidArgument("needs r >= 1 and l >= 1");
    return confirm([&] { return VdwRule(l); }, n, r, budget, canonicalize);
}

}  // namespace brownlab
