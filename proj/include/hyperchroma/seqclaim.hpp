#pragma once

#include <cmath>
#include <vector>

namespace hyperchroma {

// The coupled decay recurrences
//   d_{t+1} = d_t / 2^b + d_t^{1 - 1/m}
//   s_{t+1} = s_t / 2^a + d_t^{a/b - 1/m},   s_0 = d_0^{a/b} g
// satisfy d_t <= 2 d_0 2^{-bt} and s_t <= d_t^{a/b} g + d_t^{a/b - 1/(2m)}
// whenever d_t stays above an explicit threshold D. Iterated in long double.

// Explicit validity threshold, the max of what each proof step needs.
// Writing y = a/b - 1/m and c* = 2^b / (m (2^{b/m} - 1)):
//  - the geometric-sum step of the s-chain bounds the accumulated source
//    terms by C d_t^y with C = 2^{y+a} / (2^{b/m} - 1) when y > 0, and by
//    C = 2^a / (2^{a+b|y|} - 1) when y <= 0; absorbing C into the slack
//    factor d_t^{1/(2m)} needs d_t >= C^{2m};
//  - converting the d-induction bound (c* + (d0 2^{-bt})^{1/m})^m into
//    2 d0 2^{-bt} needs d_t >= (c* 2^{1/m} / (2^{1/m} - 1))^m.
inline long double seqclaim_threshold(double a, double b, double m) {
    long double y = static_cast<long double>(a) / b - 1.0L / m;
    long double root = std::pow(2.0L, 1.0L / m) - 1.0L;
    long double c_star = std::pow(2.0L, static_cast<long double>(b)) /
                         (m * (std::pow(2.0L, static_cast<long double>(b) / m) - 1.0L));
    long double d_threshold =
        std::pow(c_star * std::pow(2.0L, 1.0L / m) / root, static_cast<long double>(m));
    long double sum_factor;
    if (y > 0) {
        sum_factor = std::pow(2.0L, y + a) / (std::pow(2.0L, static_cast<long double>(b) / m) - 1.0L);
    } else {
        sum_factor = std::pow(2.0L, static_cast<long double>(a)) /
                     (std::pow(2.0L, a + b * (-y)) - 1.0L);
    }
    long double s_threshold = std::pow(sum_factor, 2.0L * m);
    return std::max(d_threshold, s_threshold);
}

struct SeqClaimStep {
    int t = 0;
    long double d = 0, s = 0;
    long double d_bound = 0, s_bound = 0;
    bool checked = false;  // d_t >= D
    bool ok = true;
};

struct SeqClaimReport {
    long double threshold = 0;  // D
    bool pass = true;
    int first_failure = -1;
    std::vector<SeqClaimStep> steps;
};

inline SeqClaimReport check_seqclaim(double a, double b, double m, double g, double d0,
                                     int steps) {
    SeqClaimReport report;
    report.threshold = seqclaim_threshold(a, b, m);
    long double d = d0;
    long double s = std::pow(static_cast<long double>(d0), static_cast<long double>(a) / b) * g;
    long double ab = static_cast<long double>(a) / b;
    for (int t = 0; t <= steps; ++t) {
        SeqClaimStep row;
        row.t = t;
        row.d = d;
        row.s = s;
        row.d_bound = 2.0L * d0 * std::pow(2.0L, -static_cast<long double>(b) * t);
        row.s_bound = std::pow(d, ab) * g + std::pow(d, ab - 1.0L / (2.0L * m));
        row.checked = d >= report.threshold;
        if (row.checked) {
            row.ok = d <= row.d_bound && s <= row.s_bound;
            if (!row.ok && report.first_failure < 0) {
                report.pass = false;
                report.first_failure = t;
            }
        }
        report.steps.push_back(row);
        long double dn = d / std::pow(2.0L, static_cast<long double>(b)) + std::pow(d, 1.0L - 1.0L / m);
        long double sn = s / std::pow(2.0L, static_cast<long double>(a)) + std::pow(d, ab - 1.0L / m);
        d = dn;
        s = sn;
    }
    return report;
}

}  // namespace hyperchroma
