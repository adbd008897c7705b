#pragma once

// First-principles reference computations used only by tests. Nothing here
// calls into the library's arithmetic; each value is rebuilt from energy
// bought, energy delivered and the prices at either end.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace hvdc::oracle {

// Energy left after passing `x` through each loss stage in turn.
inline double forward_energy(double x, const std::vector<double>& losses) {
    double e = x;
    for (double loss : losses) e -= e * loss;
    return e;
}

// Cash from buying `x` at the origin, shipping it through `losses` and
// selling what arrives at the destination, less a fee of `fee` per MWh sent.
inline double trade_cash(double p_origin, double p_dest, const std::vector<double>& losses, double x,
                         double fee = 0.0) {
    return forward_energy(x, losses) * p_dest - x * p_origin - fee * x;
}

enum class Choice { SendAToB, SendBToA, Idle };

struct Best {
    Choice choice;
    double profit;
};

// Best of the three explicit alternatives for one link and one hour.
inline Best best_of_three(double p_a, double p_b, double r, double x_max, double fee, double duration_h) {
    const double a_to_b = trade_cash(p_a, p_b, {r}, x_max, fee) * duration_h;
    const double b_to_a = trade_cash(p_b, p_a, {r}, x_max, fee) * duration_h;
    Best best{Choice::Idle, 0.0};
    if (a_to_b > best.profit) best = {Choice::SendAToB, a_to_b};
    if (b_to_a > best.profit) best = {Choice::SendBToA, b_to_a};
    return best;
}

// Exhaustive search over x_t in {0, X_max^t} for every step jointly.
// Exponential in T; keep T small.
inline double brute_force_horizon(const std::vector<double>& p_a, const std::vector<double>& p_b, double r,
                                  const std::vector<double>& x_max, double fee) {
    const std::size_t T = p_a.size();
    double best = 0.0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << T); ++mask) {
        for (std::size_t dirs = 0; dirs < (std::size_t{1} << T); ++dirs) {
            double total = 0.0;
            for (std::size_t t = 0; t < T; ++t) {
                const double x = (mask >> t) & 1 ? x_max[t] : 0.0;
                total += (dirs >> t) & 1 ? trade_cash(p_a[t], p_b[t], {r}, x, fee)
                                         : trade_cash(p_b[t], p_a[t], {r}, x, fee);
            }
            best = std::max(best, total);
        }
    }
    return best;
}

// Wheeling feasibility by forwarding one MWh along each leg on its own:
// leg 1 buys at the origin and sells in the transit area, leg 2 buys in the
// transit area, crosses the transit network and sells at the destination.
struct ForwardingVerdict {
    bool forward;  // 1 -> 2 -> 3
    bool reverse;  // 3 -> 2 -> 1
};

inline ForwardingVerdict forwarding_feasibility(double p1, double p2, double p3, double r1, double r2, double c) {
    const bool fwd = trade_cash(p1, p2, {r1}, 1.0) > 0.0 && trade_cash(p2, p3, {c, r2}, 1.0) > 0.0;
    const bool rev = trade_cash(p3, p2, {r2}, 1.0) > 0.0 && trade_cash(p2, p1, {c, r1}, 1.0) > 0.0;
    return {fwd, rev};
}

inline double forwarding_profit(double p_origin, double p_dest, double r_first, double r_second, double c, double x) {
    return trade_cash(p_origin, p_dest, {r_first, c, r_second}, x);
}

inline bool close(double a, double b, double rel, double scale = 1.0) {
    return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), scale});
}

}  // namespace hvdc::oracle
