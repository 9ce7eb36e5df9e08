#include "synge/numerics.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include <boost/math/tools/toms748_solve.hpp>

#include "synge/error.hpp"

namespace synge {

RootResult find_root(const std::function<double(double)>& f, double lo, double hi,
                     int bits, int max_iter) {
    return find_root(f, lo, hi, f(lo), f(hi), bits, max_iter);
}

RootResult find_root(const std::function<double(double)>& f, double lo, double hi,
                     double f_lo, double f_hi, int bits, int max_iter) {
    if (f_lo == 0.0) return {lo, 0};
    if (f_hi == 0.0) return {hi, 0};
    if (std::isnan(f_lo) || std::isnan(f_hi) || (f_lo > 0) == (f_hi > 0)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "no sign change on [" << lo << ", " << hi << "]: f = (" << f_lo << ", " << f_hi
            << ")";
        throw BracketError(msg.str());
    }
    std::uintmax_t iters = static_cast<std::uintmax_t>(max_iter);
    auto tol = boost::math::tools::eps_tolerance<double>(bits);
    auto r = boost::math::tools::toms748_solve(f, lo, hi, f_lo, f_hi, tol, iters);
    if (iters >= static_cast<std::uintmax_t>(max_iter)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "root search did not converge on [" << lo << ", " << hi << "]";
        throw ConvergenceError(msg.str());
    }
    return {0.5 * (r.first + r.second), static_cast<int>(iters)};
}

RootResultExt find_root_ext(const std::function<xreal(xreal)>& f, xreal lo, xreal hi,
                            xreal f_lo, xreal f_hi, int max_iter) {
    if (f_lo == 0) return {lo, 0};
    if (f_hi == 0) return {hi, 0};
    if (std::isnan(f_lo) || std::isnan(f_hi) || (f_lo > 0) == (f_hi > 0)) {
        std::ostringstream msg;
        msg.precision(21);
        msg << "no sign change on [" << lo << ", " << hi << "]: f = (" << f_lo << ", " << f_hi
            << ")";
        throw BracketError(msg.str());
    }
    std::uintmax_t iters = static_cast<std::uintmax_t>(max_iter);
    auto tol = boost::math::tools::eps_tolerance<xreal>(std::numeric_limits<xreal>::digits - 2);
    auto r = boost::math::tools::toms748_solve(f, lo, hi, f_lo, f_hi, tol, iters);
    if (iters >= static_cast<std::uintmax_t>(max_iter)) {
        std::ostringstream msg;
        msg.precision(21);
        msg << "root search did not converge on [" << lo << ", " << hi << "]";
        throw ConvergenceError(msg.str());
    }
    return {(r.first + r.second) / 2, static_cast<int>(iters)};
}

std::vector<double> log_grid(double a, double b, std::size_t n) {
    if (n < 2 || !(a > 0) || !(b > 0)) throw DomainError("log_grid needs n >= 2 and a, b > 0");
    std::vector<double> out(n);
    const double la = std::log(a), lb = std::log(b);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = std::exp(la + (lb - la) * static_cast<double>(i) / static_cast<double>(n - 1));
    }
    out.front() = a;
    out.back() = b;
    return out;
}

std::vector<double> linear_grid(double a, double b, std::size_t n) {
    if (n < 2) throw DomainError("linear_grid needs n >= 2");
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    out.back() = b;
    return out;
}

std::string format17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body) {
    const std::size_t nt = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, threads)));
    if (nt <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = n;
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace synge
