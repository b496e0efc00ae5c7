#ifndef RZK_INTEGER_HPP
#define RZK_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <string>

namespace rzk {

/// Arbitrary-precision integer with an inline 64-bit fast path.
///
/// Values that fit in int64 are stored inline; arithmetic is done with the
/// overflow-checking builtins and only promotes to a heap-allocated
/// boost::multiprecision::cpp_int when a result leaves the int64 range.
/// Results are demoted again as soon as they fit, so the representation of a
/// value is canonical.
class Integer {
public:
    using Big = boost::multiprecision::cpp_int;

    Integer() noexcept = default;
    template <std::signed_integral T>
    Integer(T v) noexcept : small_(static_cast<std::int64_t>(v)) {}  // NOLINT(google-explicit-constructor)
    explicit Integer(const Big& v) { assign(v); }
    explicit Integer(const std::string& decimal) { assign(Big(decimal)); }

    Integer(const Integer& o) : small_(o.small_), big_(o.big_ ? std::make_unique<Big>(*o.big_) : nullptr) {}
    Integer(Integer&&) noexcept = default;
    Integer& operator=(const Integer& o)
    {
        if (this != &o) {
            small_ = o.small_;
            big_ = o.big_ ? std::make_unique<Big>(*o.big_) : nullptr;
        }
        return *this;
    }
    Integer& operator=(Integer&&) noexcept = default;
    ~Integer() = default;

    [[nodiscard]] bool is_small() const noexcept { return !big_; }
    [[nodiscard]] bool is_zero() const noexcept { return !big_ && small_ == 0; }
    [[nodiscard]] bool is_one() const noexcept { return !big_ && small_ == 1; }
    [[nodiscard]] bool is_unit() const noexcept { return !big_ && (small_ == 1 || small_ == -1); }

    [[nodiscard]] int sign() const noexcept
    {
        if (big_) return big_->sign();
        return (small_ > 0) - (small_ < 0);
    }

    [[nodiscard]] std::int64_t to_int64() const
    {
        if (big_) throw std::overflow_error("Integer does not fit in int64: " + str());
        return small_;
    }

    [[nodiscard]] Big to_big() const { return big_ ? *big_ : Big(small_); }

    [[nodiscard]] std::string str() const { return big_ ? big_->str() : std::to_string(small_); }

    Integer operator-() const
    {
        if (!big_ && small_ != std::numeric_limits<std::int64_t>::min()) return Integer(-small_);
        return Integer(Big(-to_big()));
    }

    Integer& operator+=(const Integer& o)
    {
        std::int64_t r;
        if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &r)) {
            small_ = r;
        } else {
            assign(to_big() + o.to_big());
        }
        return *this;
    }
    Integer& operator-=(const Integer& o)
    {
        std::int64_t r;
        if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &r)) {
            small_ = r;
        } else {
            assign(to_big() - o.to_big());
        }
        return *this;
    }
    Integer& operator*=(const Integer& o)
    {
        std::int64_t r;
        if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &r)) {
            small_ = r;
        } else {
            assign(to_big() * o.to_big());
        }
        return *this;
    }
    // Truncating division, matching built-in integer semantics.
    Integer& operator/=(const Integer& o)
    {
        if (o.is_zero()) throw std::domain_error("Integer division by zero");
        if (!big_ && !o.big_ && !(small_ == std::numeric_limits<std::int64_t>::min() && o.small_ == -1)) {
            small_ = small_ / o.small_;
        } else {
            assign(to_big() / o.to_big());
        }
        return *this;
    }
    Integer& operator%=(const Integer& o)
    {
        if (o.is_zero()) throw std::domain_error("Integer division by zero");
        if (!big_ && !o.big_) {
            small_ = (o.small_ == -1) ? 0 : small_ % o.small_;
        } else {
            assign(to_big() % o.to_big());
        }
        return *this;
    }

    // this += a * b without a temporary in the common case.
    void add_mul(const Integer& a, const Integer& b)
    {
        std::int64_t p, r;
        if (!big_ && !a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &p)
            && !__builtin_add_overflow(small_, p, &r)) {
            small_ = r;
        } else {
            assign(to_big() + a.to_big() * b.to_big());
        }
    }

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
    friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
    friend Integer operator%(Integer a, const Integer& b) { return a %= b; }

    friend bool operator==(const Integer& a, const Integer& b)
    {
        if (!a.big_ && !b.big_) return a.small_ == b.small_;
        if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_)) return false;  // canonical form
        return *a.big_ == *b.big_;
    }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b)
    {
        if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
        const int c = a.to_big().compare(b.to_big());
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.str(); }

private:
    void assign(const Big& v)
    {
        if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
            small_ = static_cast<std::int64_t>(v);
            big_.reset();
        } else {
            small_ = 0;
            big_ = std::make_unique<Big>(v);
        }
    }

    std::int64_t small_ = 0;
    std::unique_ptr<Big> big_;
};

inline Integer abs(const Integer& v) { return v.sign() < 0 ? -v : v; }

inline Integer gcd(Integer a, Integer b)
{
    a = abs(a);
    b = abs(b);
    while (!b.is_zero()) {
        Integer r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Least non-negative residue of v modulo a positive modulus.
inline Integer mod_floor(const Integer& v, const Integer& modulus)
{
    Integer r = v % modulus;
    if (r.sign() < 0) r += modulus;
    return r;
}

} // namespace rzk

#endif // RZK_INTEGER_HPP
