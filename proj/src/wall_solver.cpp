#include "trapezoid/wall_solver.hpp"

#include "trapezoid/errors.hpp"
#include "trapezoid/sexagesimal.hpp"

#include <algorithm>
#include <exception>
#include <optional>
#include <stdexcept>
#include <thread>

namespace trapezoid {

namespace {

void check_wall_inputs(const Rational& a, const Rational& b, std::int64_t n) {
    if (b <= 0 || a <= b) {
        throw DomainError("party wall requires a > b > 0");
    }
    if (n < 3) {
        throw DomainError("party wall requires n >= 3, got " + std::to_string(n));
    }
}

void check_ratio(std::int64_t r, std::int64_t n) {
    if (r < 2 || n < 3) {
        throw DomainError("kernel requires r >= 2 and n >= 3");
    }
}

// Integer k with lo < k < hi and num = k * den, if any.
std::optional<std::int64_t> integral_in_range(const Integer& num, const Integer& den, std::int64_t lo,
                                              std::int64_t hi) {
    if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0) {
        return std::nullopt;
    }
    const Integer k = num / den;
    if (k <= lo || k >= hi) {
        return std::nullopt;
    }
    return static_cast<std::int64_t>(k.get_si());
}

std::vector<SearchHit> scan_ratio(std::int64_t r, std::int64_t n_lo, std::int64_t n_hi, bool regular_only) {
    std::vector<SearchHit> hits;
    const Integer ratio = to_integer(r);
    const Integer den = 2 * (ratio - 1);
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        const IntegerRoot root = isqrt(discriminant_kernel(r, n));
        if (!root.is_perfect) {
            continue;
        }
        const Integer centre = (2 * to_integer(n) + 1) * ratio - 1;
        std::vector<std::int64_t> roots;
        for (const Integer& num : {Integer(centre - root.floor_root), Integer(centre + root.floor_root)}) {
            if (const auto k = integral_in_range(num, den, 1, n)) {
                roots.push_back(*k);
            }
        }
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        if (roots.empty()) {
            continue;
        }
        // The companion root is either outside (1, n) or reported as well.
        if (roots != solve_k0(Rational(ratio), Rational(1), n)) {
            throw std::logic_error("closed-form roots disagree with the quadratic at r=" + std::to_string(r) +
                                   ", n=" + std::to_string(n));
        }
        const bool regular = is_regular(to_integer(n)).has_value();
        if (regular_only && !regular) {
            continue;
        }
        const Trapezoid t(Rational(ratio), Rational(1), Rational(1));
        for (const std::int64_t k0 : roots) {
            if (!verify_split(t, n, k0)) {
                throw std::logic_error("search hit failed the strip-sum check at r=" + std::to_string(r) +
                                       ", n=" + std::to_string(n));
            }
            hits.push_back({r, n, k0, regular});
        }
    }
    return hits;
}

}  // namespace

Rational WallQuadratic::evaluate(const Rational& k) const {
    return Rational(A * k * k + B * k + C);
}

Rational WallQuadratic::discriminant() const {
    return Rational(B * B - 4 * A * C);
}

WallQuadratic wall_quadratic(const Rational& a, const Rational& b, std::int64_t n) {
    check_wall_inputs(a, b, n);
    const Rational nn = make_rational(n);
    return WallQuadratic{
        Rational(2 * (a - b)),
        Rational(-(4 * nn * a - 2 * b + 2 * a)),
        Rational(nn * nn * (a + b) + 2 * nn * a + a - b),
    };
}

Rational discriminant(const Rational& a, const Rational& b, std::int64_t n) {
    if (a <= 0 || b <= 0 || n < 2) {
        throw DomainError("discriminant requires a, b > 0 and n >= 2");
    }
    const Rational m = make_rational(2 * n * n - 1);
    return Rational(4 * m * a * a + 4 * m * b * b + 8 * a * b);
}

Integer discriminant_kernel(std::int64_t r, std::int64_t n) {
    check_ratio(r, n);
    const Integer rr = to_integer(r);
    const Integer nn = to_integer(n);
    return Integer((2 * nn * nn - 1) * (rr * rr + 1) + 2 * rr);
}

std::pair<Rational, Rational> k0_closed_form(std::int64_t r, std::int64_t n) {
    const IntegerRoot root = isqrt(discriminant_kernel(r, n));
    if (!root.is_perfect) {
        throw IrrationalRoots("kernel at r=" + std::to_string(r) + ", n=" + std::to_string(n) +
                              " is not a perfect square");
    }
    const Integer rr = to_integer(r);
    const Integer centre = (2 * to_integer(n) + 1) * rr - 1;
    const Integer den = 2 * (rr - 1);
    return {make_rational(Integer(centre - root.floor_root), den),
            make_rational(Integer(centre + root.floor_root), den)};
}

std::vector<std::int64_t> solve_k0(const Rational& a, const Rational& b, std::int64_t n) {
    const WallQuadratic q = wall_quadratic(a, b, n);

    // Clear denominators so the roots can be tested in integers.
    Integer scale;
    mpz_lcm(scale.get_mpz_t(), q.A.get_den_mpz_t(), q.B.get_den_mpz_t());
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.C.get_den_mpz_t());
    const Integer A = Rational(q.A * scale).get_num();
    const Integer B = Rational(q.B * scale).get_num();
    const Integer C = Rational(q.C * scale).get_num();

    const IntegerRoot root = isqrt(Integer(B * B - 4 * A * C));
    if (!root.is_perfect) {
        return {};
    }
    std::vector<std::int64_t> out;
    const Integer den = 2 * A;
    for (const Integer& num : {Integer(-B - root.floor_root), Integer(-B + root.floor_root)}) {
        if (const auto k = integral_in_range(num, den, 1, n)) {
            out.push_back(*k);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool verify_split(const Trapezoid& t, std::int64_t n, std::int64_t k0) {
    if (t.upper() == t.lower()) {
        throw DomainError("party wall requires a > b");
    }
    if (n < 3 || k0 <= 1 || k0 >= n) {
        throw DomainError("wall index must satisfy 1 < k0 < n");
    }
    const Rational nn = make_rational(n);
    const auto line = [&](std::int64_t i) {
        return Rational((make_rational(n - i) * t.upper() + make_rational(i) * t.lower()) / nn);
    };
    const Rational strip_height = t.height() / nn;
    Rational left = 0;
    Rational right = 0;
    for (std::int64_t i = 1; i <= n; ++i) {
        const Rational strip = (line(i - 1) + line(i)) / 2 * strip_height;
        if (i < k0) {
            left += strip;
        } else if (i > k0) {
            right += strip;
        }
    }
    return left == right;
}

Integer SearchRange::case_count() const {
    return Integer(to_integer(r_hi - r_lo + 1) * to_integer(n_hi - n_lo + 1));
}

std::vector<SearchHit> search_hits(const SearchRange& range, const SearchOptions& options) {
    if (range.r_lo < 2 || range.r_hi < range.r_lo || range.n_lo < 3 || range.n_hi < range.n_lo) {
        throw DomainError("search requires 2 <= r_lo <= r_hi and 3 <= n_lo <= n_hi");
    }
    const auto ratios = static_cast<std::size_t>(range.r_hi - range.r_lo + 1);
    std::vector<std::vector<SearchHit>> per_ratio(ratios);
    const unsigned workers =
        std::clamp<unsigned>(options.workers, 1, static_cast<unsigned>(std::min<std::size_t>(ratios, 64)));

    std::vector<std::exception_ptr> failures(workers);

    const auto work = [&](unsigned worker) {
        try {
            for (std::size_t i = worker; i < ratios; i += workers) {
                per_ratio[i] = scan_ratio(range.r_lo + static_cast<std::int64_t>(i), range.n_lo, range.n_hi,
                                          options.regular_only);
            }
        } catch (...) {
            failures[worker] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
    }
    for (const auto& failure : failures) {
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    // Each slot is already in (n, k0) order; concatenating by r gives the
    // sequential order.
    std::vector<SearchHit> hits;
    for (auto& slot : per_ratio) {
        hits.insert(hits.end(), slot.begin(), slot.end());
    }
    return hits;
}

std::vector<SearchHit> search_hits(std::int64_t r_lo, std::int64_t r_hi, std::int64_t n_lo, std::int64_t n_hi,
                                   bool regular_only) {
    return search_hits(SearchRange{r_lo, r_hi, n_lo, n_hi}, SearchOptions{regular_only, 1});
}

}  // namespace trapezoid
