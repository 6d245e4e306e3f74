#include "brownlab/bignat.hpp"

#include "brownlab/errors.hpp"

namespace brownlab {

BigNat::BigNat(std::uint64_t v) {
    mpz_import(v_.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
}

BigNat::BigNat(const std::string& decimal) {
    if (decimal.empty() || decimal.find_first_not_of("0123456789") != std::string::npos) {
        throw InvalidArgument("not a decimal natural: '" + decimal + "'");
    }
    v_.set_str(decimal, 10);
}

BigNat BigNat::pow2(std::uint64_t exponent) {
    mpz_class r;
    mpz_setbit(r.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
    return BigNat(std::move(r));
}

BigNat& BigNat::operator+=(const BigNat& o) {
    v_ += o.v_;
    return *this;
}

BigNat& BigNat::operator-=(const BigNat& o) {
    if (cmp(v_, o.v_) < 0) throw InvalidArgument("BigNat subtraction would go negative");
    v_ -= o.v_;
    return *this;
}

BigNat& BigNat::operator*=(const BigNat& o) {
    v_ *= o.v_;
    return *this;
}

BigNat& BigNat::operator/=(const BigNat& o) {
    if (o.v_ == 0) throw InvalidArgument("BigNat division by zero");
    mpz_fdiv_q(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
    return *this;
}

BigNat BigNat::operator%(const BigNat& m) const {
    if (m.v_ == 0) throw InvalidArgument("BigNat modulo by zero");
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), v_.get_mpz_t(), m.v_.get_mpz_t());
    return BigNat(std::move(r));
}

std::uint64_t BigNat::bit_length() const {
    if (v_ == 0) return 0;
    return mpz_sizeinbase(v_.get_mpz_t(), 2);
}

bool BigNat::fits_u64() const { return bit_length() <= 64; }

std::optional<std::uint64_t> BigNat::to_u64() const {
    if (!fits_u64()) return std::nullopt;
    std::uint64_t out = 0;
    std::size_t count = 0;
    mpz_export(&out, &count, 1, sizeof(out), 0, 0, v_.get_mpz_t());
    return count == 0 ? 0 : out;
}

bool BigNat::is_power_of_two() const {
    return v_ != 0 && mpz_popcount(v_.get_mpz_t()) == 1;
}

std::string BigNat::to_string() const { return v_.get_str(10); }

std::string BigNat::to_scientific(int digits) const {
    if (v_ < 1000000) return to_string();
    // mpz_sizeinbase(…,10) may overestimate by one; derive the exponent from the digits.
    const std::string s = to_string();
    std::string out = s.substr(0, 1) + "." + s.substr(1, static_cast<std::size_t>(digits - 1));
    return out + "e+" + std::to_string(s.size() - 1);
}

}  // namespace brownlab
