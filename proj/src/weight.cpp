#include "dseries/weight.hpp"

#include "dseries/error.hpp"

#include <cctype>
#include <sstream>

namespace dseries {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
        throw Error(ErrorKind::InvalidConfig, "malformed rational '" + std::string(text) + "'");
    }
    std::string canonical(s.front() == '+' ? s.substr(1) : s);
    if (slash != std::string_view::npos && mpz_class(std::string(den)) == 0) {
        throw Error(ErrorKind::InvalidConfig, "zero denominator in '" + std::string(text) + "'");
    }
    Rational value(canonical, 10);
    value.canonicalize();
    return value;
}

std::string format_rational(const Rational& value) {
    return value.get_str(10);
}

Weight::Weight(std::initializer_list<long> coords) {
    coords_.reserve(coords.size());
    for (long c : coords) coords_.emplace_back(c);
}

Weight Weight::from_integers(const std::vector<long>& coords) {
    std::vector<Rational> out;
    out.reserve(coords.size());
    for (long c : coords) out.emplace_back(c);
    return Weight(std::move(out));
}

Weight Weight::parse(std::string_view text) {
    std::vector<Rational> out;
    std::string_view rest = trim(text);
    if (rest.empty()) return Weight(std::move(out));
    while (true) {
        auto comma = rest.find(',');
        out.push_back(parse_rational(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return Weight(std::move(out));
}

bool Weight::is_zero() const {
    for (const auto& c : coords_) {
        if (c != 0) return false;
    }
    return true;
}

bool Weight::is_integral() const {
    for (const auto& c : coords_) {
        if (c.get_den() != 1) return false;
    }
    return true;
}

void Weight::require_same_rank(const Weight& other) const {
    if (rank() != other.rank()) {
        throw Error(ErrorKind::DimensionMismatch, "weight ranks differ: " + std::to_string(rank()) +
                                                      " vs " + std::to_string(other.rank()));
    }
}

Weight& Weight::operator+=(const Weight& other) {
    require_same_rank(other);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& other) {
    require_same_rank(other);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

Weight& Weight::operator*=(const Rational& factor) {
    for (auto& c : coords_) c *= factor;
    return *this;
}

Weight Weight::operator-() const {
    Weight out(*this);
    for (auto& c : out.coords_) c = -c;
    return out;
}

bool operator==(const Weight& a, const Weight& b) {
    return a.coords_ == b.coords_;
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    const std::size_t n = std::min(a.rank(), b.rank());
    for (std::size_t i = 0; i < n; ++i) {
        int c = cmp(a.coords_[i], b.coords_[i]);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return a.rank() <=> b.rank();
}

std::string Weight::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out << ", ";
        out << format_rational(coords_[i]);
    }
    out << ')';
    return out.str();
}

std::string Weight::to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ',';
        out += format_rational(coords_[i]);
    }
    return out;
}

std::vector<std::string> Weight::to_strings() const {
    std::vector<std::string> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) out.push_back(format_rational(c));
    return out;
}

}  // namespace dseries
