#include "siginv/geometry.hpp"

#include "siginv/gl_invariants.hpp"
#include "siginv/linear_span.hpp"
#include "siginv/signature.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace siginv {

Polynomial alternating_sum(const std::vector<Letter>& letters, int d) {
    const int k = static_cast<int>(letters.size());
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    Polynomial out(d);
    do {
        int sign = 1;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (order[i] > order[j]) sign = -sign;
        Word w(k);
        for (int i = 0; i < k; ++i) w[i] = letters[order[i]];
        out.add_term(w, Rational(sign));
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

Polynomial inv_d(int d) {
    if (d < 1) throw std::invalid_argument("dimension must be positive");
    std::vector<Letter> letters(d);
    for (int i = 0; i < d; ++i) letters[i] = i + 1;
    return alternating_sum(letters, d);
}

double signed_volume(const PiecewisePath& path) {
    const int d = path.dimension();
    if (d < 1) throw std::invalid_argument("path must have at least one coordinate");
    double factorial = 1.0;
    for (int i = 2; i <= d; ++i) factorial *= i;
    return signature(path, d).pair(inv_d(d)) / factorial;
}

std::vector<std::vector<int>> triangulation_indices(int d, int point_count) {
    if (d < 1) throw std::invalid_argument("dimension must be positive");
    if (point_count < d + 1) throw std::invalid_argument("need at least d+1 points");
    const int last = point_count - 1;
    const int pairs = d / 2;
    // pick the pair starts s_1 < s_2 < .. with s_{k+1} >= s_k + 2; for odd d
    // the final index is pinned to the last point, which the starts must
    // stay clear of
    const int limit = d % 2 == 0 ? last - 1 : last - 2;
    std::vector<std::vector<int>> out;
    std::vector<int> starts(pairs);
    std::function<void(int, int)> rec = [&](int k, int min_start) {
        if (k == pairs) {
            std::vector<int> idx;
            idx.reserve(d + 1);
            idx.push_back(0);
            for (int s : starts) {
                idx.push_back(s);
                idx.push_back(s + 1);
            }
            if (d % 2 == 1) idx.push_back(last);
            out.push_back(std::move(idx));
            return;
        }
        for (int s = min_start; s + 1 <= limit + 1 - 2 * (pairs - 1 - k); ++s) {
            starts[k] = s;
            rec(k + 1, s + 2);
        }
    };
    rec(0, 1);
    return out;
}

double signed_volume_determinant_sum(const std::vector<std::vector<double>>& points) {
    if (points.empty()) throw std::invalid_argument("no points");
    const int d = static_cast<int>(points.front().size());
    if (static_cast<int>(points.size()) < d + 1) throw std::invalid_argument("need at least d+1 points");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != d) throw std::invalid_argument("inconsistent point dimension");

    double total = 0.0;
    for (const auto& idx : triangulation_indices(d, static_cast<int>(points.size()))) {
        MatrixD m(d + 1);
        for (int col = 0; col <= d; ++col) {
            m.at(0, col) = 1.0;
            for (int row = 0; row < d; ++row) m.at(row + 1, col) = points[idx[col]][row];
        }
        total += m.det();
    }
    return total;
}

VerifyReport check_recursion(int d) {
    if (d < 2) throw std::invalid_argument("dimension must be at least 2");
    VerifyReport report;
    const Polynomial full = inv_d(d);

    auto without = [&](int j) {
        std::vector<Letter> letters;
        for (int x = 1; x <= d; ++x)
            if (x != j) letters.push_back(x);
        return alternating_sum(letters, d);
    };

    for (int r = 0; r < d; ++r) {
        ++report.trials_run;
        Polynomial rhs(d);
        for (int j = 1; j <= d; ++j) {
            Polynomial term = insert_after(without(j), j, r);
            rhs += j % 2 == 1 ? term : term * Rational(-1);
        }
        if (r % 2 == 1) rhs *= Rational(-1);
        if (!(rhs == full)) {
            report.passed = false;
            report.witness = "insertion expansion fails at position " + std::to_string(r);
            return report;
        }
    }

    if (d % 2 == 1) {
        ++report.trials_run;
        Polynomial rhs(d);
        for (int j = 1; j <= d; ++j) {
            Polynomial term = shuffle_product(Polynomial::monomial(d, {j}), without(j));
            rhs += j % 2 == 1 ? term : term * Rational(-1);
        }
        if (!(rhs == full)) {
            report.passed = false;
            report.witness = "shuffle expansion fails";
            return report;
        }
    }
    return report;
}

VerifyReport check_pfaffian(int d) {
    if (d < 2 || d % 2 != 0) throw std::invalid_argument("dimension must be even");
    VerifyReport report;
    report.trials_run = 1;

    auto area = [&](Letter i, Letter j) {
        Polynomial p(d);
        p.add_term({i, j}, Rational(1));
        p.add_term({j, i}, Rational(-1));
        return p;
    };

    std::vector<int> perm(d);
    for (int i = 0; i < d; ++i) perm[i] = i + 1;
    Polynomial sum(d);
    do {
        int sign = 1;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        Polynomial term = area(perm[0], perm[1]);
        for (int k = 2; k < d; k += 2) term = shuffle_product(term, area(perm[k], perm[k + 1]));
        sum += term * Rational(sign);
    } while (std::next_permutation(perm.begin(), perm.end()));

    Rational norm(1);
    for (int i = 0; i < d / 2; ++i) norm *= Rational(2);
    for (int i = 2; i <= d / 2; ++i) norm *= Rational(i);
    sum *= Rational(1) / norm;

    if (!(sum == inv_d(d))) {
        report.passed = false;
        report.witness = "shuffle Pfaffian differs from the alternating invariant";
    }
    return report;
}

VerifyReport closing_invariance(const PiecewisePath& path) {
    const int d = path.dimension();
    if (d % 2 != 0) throw std::invalid_argument("closure invariance needs even dimension");
    VerifyReport report;
    report.trials_run = 1;
    const Polynomial inv = inv_d(d);
    const double open_value = signature(path, d).pair(inv);
    PiecewisePath closed = path;
    closed.points.push_back(closed.points.front());
    const double closed_value = signature(closed, d).pair(inv);
    if (std::abs(open_value - closed_value) >
        1e-10 * (1.0 + std::max(std::abs(open_value), std::abs(closed_value)))) {
        report.passed = false;
        std::ostringstream os;
        os << "pairing changed on closure: " << open_value << " vs " << closed_value;
        report.witness = os.str();
    }
    return report;
}

VerifyReport lag_one_correlation_identity(const PiecewisePath& path) {
    if (path.dimension() != 2) throw std::invalid_argument("identity is planar");
    VerifyReport report;
    report.trials_run = 1;

    Polynomial area(2);
    area.add_term({1, 2}, Rational(1));
    area.add_term({2, 1}, Rational(-1));
    const double lhs = signature(path, 2).pair(area);

    // start-subtracted coordinate sequences
    const auto& pts = path.points;
    double rhs = 0.0;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        const double u_i = pts[i][0] - pts[0][0];
        const double u_next = pts[i + 1][0] - pts[0][0];
        const double v_i = pts[i][1] - pts[0][1];
        const double v_next = pts[i + 1][1] - pts[0][1];
        rhs += v_next * u_i - u_next * v_i;
    }

    if (std::abs(lhs - rhs) > 1e-10 * (1.0 + std::max(std::abs(lhs), std::abs(rhs)))) {
        report.passed = false;
        std::ostringstream os;
        os << "pairing " << lhs << " differs from correlation form " << rhs;
        report.witness = os.str();
    }
    return report;
}

double integral_moment(const PiecewisePath& path, const std::vector<int>& alpha, int target) {
    const int d = path.dimension();
    if (static_cast<int>(alpha.size()) != d)
        throw std::invalid_argument("one exponent per coordinate required");
    for (int a : alpha)
        if (a < 0) throw std::invalid_argument("exponents must be nonnegative");
    if (target < 1 || target > d) throw std::invalid_argument("target coordinate out of range");

    double total = 0.0;
    for (size_t seg = 0; seg + 1 < path.points.size(); ++seg) {
        const auto& p = path.points[seg];
        const auto& q = path.points[seg + 1];
        const double dtarget = q[target - 1] - p[target - 1];
        if (dtarget == 0.0) continue;
        // multiply out prod_j (p_j + t delta_j)^alpha_j as a polynomial in t
        std::vector<double> coeff{1.0};
        for (int j = 0; j < d; ++j) {
            const int a = alpha[j];
            if (a == 0) continue;
            const double base = p[j];
            const double delta = q[j] - p[j];
            std::vector<double> factor(a + 1, 0.0);
            double binom = 1.0;
            for (int k = 0; k <= a; ++k) {
                factor[k] = binom * std::pow(base, a - k) * std::pow(delta, k);
                binom = binom * (a - k) / (k + 1);
            }
            std::vector<double> next(coeff.size() + a, 0.0);
            for (size_t i = 0; i < coeff.size(); ++i)
                for (int k = 0; k <= a; ++k) next[i + k] += coeff[i] * factor[k];
            coeff.swap(next);
        }
        double integral = 0.0;
        for (size_t k = 0; k < coeff.size(); ++k) integral += coeff[k] / static_cast<double>(k + 1);
        total += integral * dtarget;
    }
    return total;
}

PiecewisePath lemniscate_path(int orientation, int samples) {
    if (orientation != 1 && orientation != -1) throw std::invalid_argument("orientation is +1 or -1");
    if (samples < 3) throw std::invalid_argument("need at least 3 samples");
    PiecewisePath path;
    path.points.reserve(samples + 1);
    for (int i = 0; i <= samples; ++i) {
        const double t = 2.0 * std::numbers::pi * i / samples;
        path.points.push_back({orientation * std::cos(t), std::sin(2.0 * t)});
    }
    return path;
}

PiecewisePath moment_curve_path(int d, int samples) {
    if (d < 1) throw std::invalid_argument("dimension must be positive");
    if (samples < 1) throw std::invalid_argument("need at least 1 sample");
    PiecewisePath path;
    path.points.reserve(samples + 1);
    for (int i = 0; i <= samples; ++i) {
        const double t = static_cast<double>(i) / samples;
        std::vector<double> p(d);
        double power = t;
        for (int j = 0; j < d; ++j) {
            p[j] = power;
            power *= t;
        }
        path.points.push_back(std::move(p));
    }
    return path;
}

Polynomial moment_invariant_phi(int which) {
    Polynomial out(2);
    switch (which) {
        case 1:
            // the printed degree-2 combination cancels to zero
            out.add_term({1, 2}, Rational(1, 2));
            out.add_term({1, 2}, Rational(-1, 2));
            return out;
        case 2: {
            const Rational third(1, 3);
            out.add_term({1, 2, 2, 1}, third);
            out.add_term({1, 2, 1, 2}, third);
            out.add_term({1, 1, 2, 2}, Rational(-2, 3));
            out.add_term({2, 1, 2, 1}, third);
            out.add_term({2, 1, 1, 2}, third);
            out.add_term({2, 2, 1, 1}, Rational(-2, 3));
            return out;
        }
        case 3: {
            const std::pair<int, const char*> terms[] = {
                {-1, "121212"}, {-1, "211122"}, {1, "212121"}, {1, "221112"}, {-1, "121221"},
                {1, "122211"},  {-1, "112212"}, {1, "122112"}, {-1, "211212"}, {-1, "211221"},
                {-1, "121122"}, {1, "122121"},  {-3, "222111"}, {3, "111222"}, {1, "221121"},
                {1, "212211"},  {-1, "112122"}, {1, "212112"}, {-1, "112221"}, {1, "221211"}};
            for (const auto& [c, digits] : terms) {
                Word w;
                for (const char* s = digits; *s; ++s) w.push_back(*s - '0');
                out.add_term(w, Rational(c));
            }
            return out;
        }
        default: throw std::invalid_argument("only combinations 1..3 exist");
    }
}

VerifyReport check_moment_invariant_span(int level) {
    if (level != 4 && level != 6) throw std::invalid_argument("combinations exist at level 4 and 6");
    VerifyReport report;
    report.trials_run = 1;
    const int w = level / 2;
    const Polynomial target = moment_invariant_phi(w);

    LinearSpan span(2);
    for (const auto& desc : gl_basis(2, w)) span.insert(desc.poly);
    const auto coords = span.coordinates(target);
    if (!coords) {
        report.passed = false;
        report.witness = "combination falls outside the weight-" + std::to_string(w) + " span";
        return report;
    }
    std::string text = "coordinates (";
    for (size_t i = 0; i < coords->size(); ++i)
        text += (i ? ", " : "") + rational_to_string((*coords)[i]);
    report.witness = text + ")";
    return report;
}

}  // namespace siginv
