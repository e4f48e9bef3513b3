#pragma once

#include "ssgraph/errors.hpp"
#include "ssgraph/integers.hpp"
#include "ssgraph/poly.hpp"
#include "ssgraph/prime.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace ssgraph {

// Classical modular polynomial Phi_l(X, Y): symmetric, monic of degree l+1 in
// each variable, and Kronecker-congruent to (X^l - Y)(X - Y^l) mod l.
// Coefficients are stored once per symmetric orbit, keyed by (i, j) with
// i >= j, as arbitrary-precision integers.
class ModularPolynomial {
public:
    using CoeffMap = std::map<std::pair<int, int>, Int>;

    ModularPolynomial(std::int64_t level, CoeffMap coeffs)
        : level_(level), c_(std::move(coeffs)) {
        for (auto it = c_.begin(); it != c_.end();) {
            if (it->second == 0) it = c_.erase(it);
            else ++it;
        }
        validate();
    }

    std::int64_t level() const { return level_; }

    // Coefficient of X^i Y^j; symmetric lookup.
    const Int& coeff(int i, int j) const {
        static const Int zero = 0;
        auto it = c_.find(i >= j ? std::make_pair(i, j) : std::make_pair(j, i));
        return it == c_.end() ? zero : it->second;
    }

    const CoeffMap& coefficients() const { return c_; }

    friend bool operator==(const ModularPolynomial&, const ModularPolynomial&) = default;

    // One "[i,j] c" line per stored orbit, ascending (i, j).
    std::string serialize() const {
        std::ostringstream os;
        for (const auto& [ij, v] : c_)
            os << '[' << ij.first << ',' << ij.second << "] " << v << '\n';
        return os.str();
    }

private:
    void validate() const {
        if (!is_prime(level_))
            throw validation_error("level", "l must be prime");
        const int deg = static_cast<int>(level_) + 1;
        for (const auto& [ij, v] : c_) {
            (void)v;
            if (ij.first < ij.second)
                throw validation_error("symmetric storage", "coefficient key with i < j");
            if (ij.first > deg || ij.second > deg)
                throw validation_error("degree", "exponent exceeds l+1");
        }
        if (coeff(deg, 0) != 1)
            throw validation_error("monic", "leading coefficient of X^(l+1) must be 1");
        for (int j = 1; j <= deg; ++j)
            if (coeff(deg, j) != 0)
                throw validation_error("monic", "degree in each variable must be l+1");
        // Kronecker congruence: Phi_l = (X^l - Y)(X - Y^l) mod l.
        for (int i = 0; i <= deg; ++i)
            for (int j = 0; j <= i; ++j) {
                Int want = 0;
                if (i == deg && j == 0) want = 1;
                else if (i == level_ && j == level_) want = -1;
                else if (i == 1 && j == 1) want = -1;
                Int got = coeff(i, j) % level_;
                if ((got - want) % level_ != 0)
                    throw validation_error("kronecker congruence",
                                           "coefficient of X^" + std::to_string(i) + " Y^" +
                                               std::to_string(j) + " is wrong mod l");
            }
    }

    std::int64_t level_;
    CoeffMap c_;
};

// Phi_l with coefficients reduced mod p, ready for specialization at
// supersingular j-invariants. Requires l != p.
class ReducedModularPolynomial {
public:
    ReducedModularPolynomial(const ModularPolynomial& phi, PrimeModulus p)
        : level_(phi.level()), p_(p.value()) {
        if (level_ == p_)
            throw std::domain_error("T_p not available via Phi_p (need l != p)");
        const int deg = static_cast<int>(level_) + 1;
        c_.assign(static_cast<std::size_t>(deg + 1) * (deg + 1), 0);
        for (int i = 0; i <= deg; ++i)
            for (int j = 0; j <= deg; ++j) {
                Int r = phi.coeff(i, j) % p_;
                if (r < 0) r += p_;
                c_[static_cast<std::size_t>(i) * (deg + 1) + j] = static_cast<std::int64_t>(r);
            }
    }

    std::int64_t level() const { return level_; }
    std::int64_t p() const { return p_; }

    std::int64_t coeff(int i, int j) const {
        return c_[static_cast<std::size_t>(i) * (level_ + 2) + j];
    }

    // Phi_l(x, Y) as a polynomial in Y over GF(p^2).
    Poly specialize(const QuadField& F, F2 x) const {
        const int deg = static_cast<int>(level_) + 1;
        Poly f(static_cast<std::size_t>(deg) + 1, F.zero());
        // powers of x
        std::vector<F2> xp(static_cast<std::size_t>(deg) + 1);
        xp[0] = F.one();
        for (int i = 1; i <= deg; ++i) xp[i] = F.mul(xp[i - 1], x);
        for (int j = 0; j <= deg; ++j) {
            F2 acc = F.zero();
            for (int i = 0; i <= deg; ++i)
                acc = F.add(acc, F.mul(F.make(coeff(i, j)), xp[i]));
            f[j] = acc;
        }
        poly::normalize(f);
        return f;
    }

private:
    std::int64_t level_;
    std::int64_t p_;
    std::vector<std::int64_t> c_;
};

inline ReducedModularPolynomial reduce_mod_p(const ModularPolynomial& phi, PrimeModulus p) {
    return ReducedModularPolynomial(phi, p);
}

namespace detail {

struct PhiCoeffEntry {
    int i, j;
    const char* value;
};

// Coefficients kept as decimal text; no width assumptions.
inline constexpr PhiCoeffEntry kPhi2[] = {
    {3, 0, "1"},
    {2, 2, "-1"},
    {2, 1, "1488"},
    {2, 0, "-162000"},
    {1, 1, "40773375"},
    {1, 0, "8748000000"},
    {0, 0, "-157464000000000"},
};

inline constexpr PhiCoeffEntry kPhi3[] = {
    {4, 0, "1"},
    {3, 3, "-1"},
    {3, 2, "2232"},
    {3, 1, "-1069956"},
    {3, 0, "36864000"},
    {2, 2, "2587918086"},
    {2, 1, "8900222976000"},
    {2, 0, "452984832000000"},
    {1, 1, "-770845966336000000"},
    {1, 0, "1855425871872000000000"},
};

template <std::size_t N>
ModularPolynomial make_embedded(std::int64_t level, const PhiCoeffEntry (&table)[N]) {
    ModularPolynomial::CoeffMap m;
    for (const auto& e : table) m[{e.i, e.j}] = Int(e.value);
    return ModularPolynomial(level, std::move(m));
}

} // namespace detail

// The built-in levels. Phi_2 and Phi_3 suffice to split all rational
// eigenspaces at desk scale; larger levels come from database files.
inline const ModularPolynomial& embedded_phi(std::int64_t level) {
    static const ModularPolynomial phi2 = detail::make_embedded(2, detail::kPhi2);
    static const ModularPolynomial phi3 = detail::make_embedded(3, detail::kPhi3);
    if (level == 2) return phi2;
    if (level == 3) return phi3;
    throw std::domain_error("Phi_" + std::to_string(level) +
                            " is not embedded; supply a database file");
}

// Parses the plain-text exponent-pair format: each non-empty line is
// "[i,j] c" with c a signed decimal integer; absent pairs are 0; an entry
// populates both (i,j) and (j,i).
inline ModularPolynomial parse_phi_file(std::istream& in, std::int64_t level) {
    ModularPolynomial::CoeffMap m;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        };
        skip_ws();
        if (pos == line.size()) continue;
        auto fail = [&](const std::string& what) -> parse_error {
            return parse_error(lineno, what);
        };
        if (line[pos] != '[') throw fail("expected '['");
        ++pos;
        auto read_int = [&]() -> long {
            skip_ws();
            std::size_t start = pos;
            if (pos < line.size() && (line[pos] == '-' || line[pos] == '+')) ++pos;
            while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
            if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(line[start]))))
                throw fail("expected integer");
            return std::stol(line.substr(start, pos - start));
        };
        long i = read_int();
        skip_ws();
        if (pos >= line.size() || line[pos] != ',') throw fail("expected ','");
        ++pos;
        long j = read_int();
        skip_ws();
        if (pos >= line.size() || line[pos] != ']') throw fail("expected ']'");
        ++pos;
        skip_ws();
        std::size_t start = pos;
        if (pos < line.size() && (line[pos] == '-' || line[pos] == '+')) ++pos;
        while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(line[start]))))
            throw fail("expected coefficient");
        Int value(line.substr(start, pos - start));
        skip_ws();
        if (pos != line.size()) throw fail("trailing characters");
        if (i < 0 || j < 0) throw fail("negative exponent");
        auto key = i >= j ? std::make_pair(static_cast<int>(i), static_cast<int>(j))
                          : std::make_pair(static_cast<int>(j), static_cast<int>(i));
        if (m.count(key)) throw fail("duplicate coefficient for the symmetric pair");
        m[key] = std::move(value);
    }
    return ModularPolynomial(level, std::move(m)); // constructor validates
}

// Read-only database: embedded levels plus optional on-disk files named
// phi_<l>.txt in a configured directory. Loaded polynomials are cached;
// concurrent get() is safe.
class ModPolyDb {
public:
    explicit ModPolyDb(std::optional<std::filesystem::path> dir = std::nullopt)
        : dir_(std::move(dir)) {}

    const ModularPolynomial& get(std::int64_t level) const {
        if (level == 2 || level == 3) return embedded_phi(level);
        std::lock_guard<std::mutex> lock(mu_);
        auto it = loaded_.find(level);
        if (it != loaded_.end()) return it->second;
        if (!dir_)
            throw std::domain_error("Phi_" + std::to_string(level) +
                                    " is not embedded; supply a database file via --modpoly-dir");
        auto path = *dir_ / ("phi_" + std::to_string(level) + ".txt");
        std::ifstream in(path);
        if (!in)
            throw std::domain_error("cannot open modular polynomial file " + path.string());
        auto [pos, inserted] = loaded_.emplace(level, parse_phi_file(in, level));
        (void)inserted;
        return pos->second;
    }

private:
    std::optional<std::filesystem::path> dir_;
    mutable std::mutex mu_;
    mutable std::map<std::int64_t, ModularPolynomial> loaded_;
};

} // namespace ssgraph
