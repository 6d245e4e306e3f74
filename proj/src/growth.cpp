#include "brownlab/growth.hpp"

#include <charconv>

#include "brownlab/errors.hpp"

namespace brownlab {

struct GrowthFn::Node {
    Kind kind = Kind::Identity;
    std::uint64_t slope = 0;
    std::vector<std::uint64_t> table;
    TailRule tail = TailRule::Constant;
    std::shared_ptr<const Node> inner;
    bool nondecreasing = true;
};

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    return __builtin_add_overflow(a, b, &r) ? kSaturated : r;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    return __builtin_mul_overflow(a, b, &r) ? kSaturated : r;
}

std::uint64_t saturate(const BigNat& v) { return v.to_u64().value_or(kSaturated); }

constexpr std::uint64_t kIterationLimit = 100'000'000;

}  // namespace

GrowthFn GrowthFn::identity() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Identity;
    n->slope = 1;
    return GrowthFn(std::move(n));
}

GrowthFn GrowthFn::linear(std::uint64_t slope) {
    if (slope == 0) throw InvalidArgument("linear growth needs slope m >= 1");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Linear;
    n->slope = slope;
    return GrowthFn(std::move(n));
}

GrowthFn GrowthFn::exp2() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Exp2;
    return GrowthFn(std::move(n));
}

GrowthFn GrowthFn::table(std::vector<std::uint64_t> values, TailRule tail) {
    if (values.empty()) throw InvalidArgument("growth table needs at least one value");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Table;
    n->tail = tail;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] < values[i - 1]) n->nondecreasing = false;
    }
    n->table = std::move(values);
    return GrowthFn(std::move(n));
}

GrowthFn GrowthFn::closure(const GrowthFn& inner) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Closure;
    n->inner = inner.node_;
    return GrowthFn(std::move(n));
}

GrowthFn::Kind GrowthFn::kind() const { return node_->kind; }
bool GrowthFn::nondecreasing() const { return node_->nondecreasing; }
std::uint64_t GrowthFn::slope() const { return node_->slope; }

std::string GrowthFn::spec() const {
    switch (node_->kind) {
        case Kind::Identity: return "id";
        case Kind::Linear: return "linear:" + std::to_string(node_->slope);
        case Kind::Exp2: return "exp2";
        case Kind::Table: {
            std::string s = "table:";
            for (std::size_t i = 0; i < node_->table.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(node_->table[i]);
            }
            s += node_->tail == TailRule::Constant ? ";tail=const" : ";tail=linear";
            return s;
        }
        case Kind::Closure: return "closure:" + GrowthFn(node_->inner).spec();
    }
    return {};
}

std::uint64_t GrowthFn::operator()(std::uint64_t d) const {
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::Identity:
        case Kind::Linear: return sat_mul(n.slope, d);
        case Kind::Exp2: return d >= 64 ? kSaturated : (std::uint64_t{1} << d);
        case Kind::Table: {
            const auto k = n.table.size();
            if (d < k) return n.table[d];
            const auto last = n.table.back();
            if (n.tail == TailRule::Constant || k == 1) return last;
            const auto prev = n.table[k - 2];
            const auto steps = d - (k - 1);
            if (last >= prev) return sat_add(last, sat_mul(steps, last - prev));
            const auto drop = sat_mul(steps, prev - last);
            return drop >= last ? 0 : last - drop;
        }
        case Kind::Closure: {
            const GrowthFn inner(n.inner);
            if (n.inner->kind == Kind::Exp2) {
                return d >= 63 ? kSaturated : (std::uint64_t{1} << (d + 1)) - 1;
            }
            if (n.inner->kind != Kind::Closure) {
                try {
                    return saturate(exact(BigNat(d), 128));
                } catch (const MagnitudeOverflow&) {
                    return kSaturated;
                }
            }
            std::uint64_t sum = 0;
            for (std::uint64_t i = 0; i <= d; ++i) {
                if (i > kIterationLimit) {
                    throw ResourceLimit("nested closure evaluation at " + std::to_string(d) +
                                        " exceeds the iteration limit");
                }
                sum = sat_add(sum, inner(i));
                if (sum == kSaturated) break;
            }
            return sum;
        }
    }
    return 0;
}

namespace {

void check_bits(const BigNat& v, std::uint64_t cap, const char* what) {
    if (v.bit_length() > cap) {
        throw MagnitudeOverflow(std::string(what) + " exceeds the " + std::to_string(cap) +
                                "-bit cap");
    }
}

std::uint64_t exponent_or_throw(const BigNat& n, std::uint64_t cap) {
    auto e = n.to_u64();
    if (!e || *e >= cap) {
        throw MagnitudeOverflow("2^" + n.to_scientific() + " exceeds the " +
                                std::to_string(cap) + "-bit cap");
    }
    return *e;
}

}  // namespace

BigNat GrowthFn::exact(const BigNat& arg, std::uint64_t bit_cap) const {
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::Identity:
        case Kind::Linear: {
            BigNat v = arg * BigNat(n.slope);
            check_bits(v, bit_cap, "linear value");
            return v;
        }
        case Kind::Exp2: return BigNat::pow2(exponent_or_throw(arg, bit_cap));
        case Kind::Table: {
            const auto k = n.table.size();
            if (arg < BigNat(k)) return BigNat(n.table[*arg.to_u64()]);
            const BigNat last(n.table.back());
            if (n.tail == TailRule::Constant || k == 1) return last;
            const auto prev = n.table[k - 2];
            const BigNat steps = arg - BigNat(k - 1);
            if (n.table.back() >= prev) {
                BigNat v = last + steps * BigNat(n.table.back() - prev);
                check_bits(v, bit_cap, "table tail value");
                return v;
            }
            const BigNat drop = steps * BigNat(prev - n.table.back());
            return drop >= last ? BigNat(0) : last - drop;
        }
        case Kind::Closure: {
            const Node& in = *n.inner;
            switch (in.kind) {
                case Kind::Identity:
                case Kind::Linear: {
                    BigNat v = BigNat(in.slope) * arg * (arg + 1) / 2;
                    check_bits(v, bit_cap, "closure value");
                    return v;
                }
                case Kind::Exp2: {
                    const auto e = exponent_or_throw(arg + 1, bit_cap + 1);
                    return BigNat::pow2(e) - 1;
                }
                case Kind::Table: {
                    const auto k = in.table.size();
                    BigNat sum = 0;
                    const std::uint64_t upto =
                        arg < BigNat(k) ? *arg.to_u64() : static_cast<std::uint64_t>(k - 1);
                    for (std::uint64_t i = 0; i <= upto; ++i) sum += in.table[i];
                    if (arg < BigNat(k)) return sum;
                    const BigNat last(in.table.back());
                    const BigNat t = arg - BigNat(k - 1);  // number of tail terms
                    if (in.tail == TailRule::Constant || k == 1) {
                        sum += last * t;
                    } else if (in.table.back() >= in.table[k - 2]) {
                        const BigNat delta(in.table.back() - in.table[k - 2]);
                        sum += t * last + delta * t * (t + 1) / 2;
                    } else {
                        // Terms last - j*delta for j = 1..t, clamped at zero.
                        const BigNat delta(in.table[k - 2] - in.table.back());
                        BigNat live = last / delta;
                        if (t < live) live = t;
                        sum += live * last;
                        sum -= delta * live * (live + 1) / 2;
                    }
                    check_bits(sum, bit_cap, "closure value");
                    return sum;
                }
                case Kind::Closure: {
                    const auto bound = arg.to_u64();
                    if (!bound || *bound > 1'000'000) {
                        throw MagnitudeOverflow("nested closure at " + arg.to_scientific() +
                                                " is too large to sum exactly");
                    }
                    const GrowthFn inner(n.inner);
                    BigNat sum = 0;
                    for (std::uint64_t i = 0; i <= *bound; ++i) {
                        sum += inner.exact(BigNat(i), bit_cap);
                        check_bits(sum, bit_cap, "closure value");
                    }
                    return sum;
                }
            }
        }
    }
    return BigNat(0);
}

namespace {

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    GrowthFn parse() {
        GrowthFn f = parse_spec();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("growth spec '" + std::string(text_) + "': " + msg, 1, pos_ + 1);
    }

    bool consume(std::string_view word) {
        if (text_.substr(pos_).starts_with(word)) {
            pos_ += word.size();
            return true;
        }
        return false;
    }

    std::uint64_t number() {
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec == std::errc::result_out_of_range) fail("number out of range");
        if (ec != std::errc() || ptr == first) fail("expected a natural number");
        pos_ += static_cast<std::size_t>(ptr - first);
        return v;
    }

    GrowthFn parse_spec() {
        if (consume("closure:")) return GrowthFn::closure(parse_spec());
        if (consume("linear:")) {
            const auto at = pos_;
            const auto m = number();
            if (m == 0) {
                pos_ = at;
                fail("linear slope must be >= 1");
            }
            return GrowthFn::linear(m);
        }
        if (consume("table:")) {
            std::vector<std::uint64_t> values{number()};
            while (consume(",")) values.push_back(number());
            TailRule tail = TailRule::Constant;
            if (consume(";")) {
                if (!consume("tail=")) fail("expected 'tail='");
                if (consume("const")) {
                    tail = TailRule::Constant;
                } else if (consume("linear")) {
                    tail = TailRule::Linear;
                } else {
                    fail("tail rule must be 'const' or 'linear'");
                }
            }
            return GrowthFn::table(std::move(values), tail);
        }
        if (consume("exp2")) return GrowthFn::exp2();
        if (consume("id")) return GrowthFn::identity();
        fail("expected one of id, linear:<m>, exp2, table:..., closure:<spec>");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

GrowthFn GrowthFn::parse(std::string_view text) { return SpecParser(text).parse(); }

}  // namespace brownlab
