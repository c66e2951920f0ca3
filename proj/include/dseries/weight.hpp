#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace dseries {

using Rational = mpq_class;

/// Parses "n" or "p/q" (optional leading minus). Throws Error(InvalidConfig)
/// on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical string form: "n" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

/// An element of h^* in fundamental-weight coordinates. Coordinates are exact
/// rationals; nothing about integrality is assumed.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::size_t rank) : coords_(rank) {}
    explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    Weight(std::initializer_list<long> coords);

    static Weight from_integers(const std::vector<long>& coords);
    /// Comma-separated rationals, e.g. "-1/2,3".
    static Weight parse(std::string_view text);

    std::size_t rank() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_integral() const;

    Weight& operator+=(const Weight& other);
    Weight& operator-=(const Weight& other);
    Weight& operator*=(const Rational& factor);

    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(const Rational& f, Weight a) { return a *= f; }
    Weight operator-() const;

    friend bool operator==(const Weight& a, const Weight& b);
    /// Lexicographic on coordinates; used for every deterministic ordering.
    friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

    /// "(a, b, c)" for human-readable output.
    std::string to_string() const;
    /// "a,b,c" as accepted by parse().
    std::string to_csv() const;
    std::vector<std::string> to_strings() const;

private:
    void require_same_rank(const Weight& other) const;

    std::vector<Rational> coords_;
};

}  // namespace dseries
