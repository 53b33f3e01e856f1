// SPDX-License-Identifier: Apache-2.0
//! \file wicksell/common.hpp
//! Error types, the extreme-value class tag and small shared utilities.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace wicksell {

//---------------------------------------------------------------------------
// Errors
//---------------------------------------------------------------------------

//! Bad constructor or operation parameter (non-positive shape, negative shift, ...).
class InvalidParameterError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

//! Argument outside an operation's domain (quantile level, abscissa, ...).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

//! A moment integral kept growing past every cutoff.
class DivergentMomentError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

//! Section density requested exactly at an atom of the input law (r = 1).
class SingularDensityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

//! Adaptive quadrature failed to reach its tolerance.
class QuadratureError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

//! A CDF value underflowed where a tail probe needed it.
class UnderflowError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

//! Order statistics tie at the threshold of a tail estimator.
class DegenerateThresholdError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

//! Degenerate normalizing scale in a block-minima experiment.
class ScaleError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

//! Simulation budget exceeded; reported before any allocation.
class ResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

//! Requested a case the theory does not cover (Frechet input class).
class UnsupportedCaseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

//! File or format problem in the CSV/JSON layer.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

//! Bad command line / rendering request.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

//---------------------------------------------------------------------------
// Extreme-value classification (minima convention)
//---------------------------------------------------------------------------

//! Domain-of-attraction tag for sample minima: Frechet, Weibull or Gumbel.
//! The shape alpha is meaningful (and strictly positive) for the first two.
struct EvtClass {
    enum class Family { frechet, weibull, gumbel };

    Family family = Family::weibull;
    double alpha = 1.0;

    static EvtClass frechet(double a)
    {
        require_shape(a);
        return {Family::frechet, a};
    }
    static EvtClass weibull(double a)
    {
        require_shape(a);
        return {Family::weibull, a};
    }
    static EvtClass gumbel() { return {Family::gumbel, 0.0}; }

    bool operator==(const EvtClass&) const = default;

    std::string name() const
    {
        switch (family) {
            case Family::frechet: return "frechet(" + std::to_string(alpha) + ")";
            case Family::weibull: return "weibull(" + std::to_string(alpha) + ")";
            default: return "gumbel";
        }
    }

  private:
    static void require_shape(double a)
    {
        if (!(a > 0))
            throw InvalidParameterError("EvtClass: shape alpha must be positive");
    }
};

//! A point mass of a radius distribution.
struct Atom {
    double position = 0;
    double mass = 0;
};

//---------------------------------------------------------------------------
// Threading
//---------------------------------------------------------------------------

//! Worker count: WICKSELL_THREADS when set, hardware concurrency otherwise.
inline int default_thread_count()
{
    if (const char* env = std::getenv("WICKSELL_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1)
            return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

//! Run body(i) for i in [0, n). Results must be written by index; the
//! partition is contiguous so output is independent of the thread count.
template <class F>
void parallel_for(std::size_t n, int threads, F&& body)
{
    if (threads <= 0)
        threads = default_thread_count();
    if (threads == 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t lo = n * w / workers;
        std::size_t hi = n * (w + 1) / workers;
        pool.emplace_back([&, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i)
                    body(i);
            }
            catch (...) {
                if (!first_error)
                    first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

//! x^n for small non-negative integer n.
inline double ipow(double x, int n)
{
    double out = 1.0;
    for (int i = 0; i < n; ++i)
        out *= x;
    return out;
}

}  // namespace wicksell
