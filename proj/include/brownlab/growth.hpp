#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "brownlab/bignat.hpp"

namespace brownlab {

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
inline constexpr std::uint64_t kDefaultBitCap = std::uint64_t{1} << 25;

enum class TailRule { Constant, Linear };

// The largeness threshold f: N -> N.
//
// Textual form (round-trips through parse/spec):
//   id | linear:<m> | exp2 | table:<v0>,<v1>,...[;tail=const|linear] | closure:<spec>
// Table entry i is f(i). Past the table, "const" repeats the last value and "linear"
// continues with the last difference (clamped at 0). A table without a tail clause
// parses as tail=const.
class GrowthFn {
public:
    enum class Kind { Identity, Linear, Exp2, Table, Closure };

    static GrowthFn identity();
    static GrowthFn linear(std::uint64_t slope);
    static GrowthFn exp2();
    static GrowthFn table(std::vector<std::uint64_t> values, TailRule tail);
    // g(n) = f(0) + f(1) + ... + f(n); always nondecreasing and g >= f pointwise.
    static GrowthFn closure(const GrowthFn& inner);

    static GrowthFn parse(std::string_view text);

    Kind kind() const;
    bool nondecreasing() const;
    std::string spec() const;

    // Linear slope (1 for Identity); 0 for other kinds.
    std::uint64_t slope() const;

    // f(d), saturating at kSaturated. Comparisons against sizes below 2^64 stay exact.
    std::uint64_t operator()(std::uint64_t d) const;

    // Exact f(n). Throws MagnitudeOverflow when the result would exceed bit_cap bits.
    BigNat exact(const BigNat& n, std::uint64_t bit_cap = kDefaultBitCap) const;

    friend bool operator==(const GrowthFn& a, const GrowthFn& b) { return a.spec() == b.spec(); }

private:
    struct Node;
    explicit GrowthFn(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

}  // namespace brownlab
