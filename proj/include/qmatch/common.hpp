#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmatch {

// Single error type for the whole library. The code distinguishes the
// failure classes that callers (and the C API) need to tell apart.
class Error : public std::runtime_error {
 public:
  enum class Code {
    Dimension,
    Validation,
    Capability,
    Parse,
    Io,
    Solver,
  };

  Error(Code code, const std::string& msg) : std::runtime_error(msg), code_(code) {}

  Code code() const { return code_; }

  static Error dimension(const std::string& msg) { return {Code::Dimension, msg}; }
  static Error validation(const std::string& msg) { return {Code::Validation, msg}; }
  static Error capability(const std::string& msg) { return {Code::Capability, msg}; }
  static Error parse(const std::string& msg) { return {Code::Parse, msg}; }
  static Error io(const std::string& msg) { return {Code::Io, msg}; }
  static Error solver(const std::string& msg) { return {Code::Solver, msg}; }

 private:
  Code code_;
};

// Dense row-major matrix of doubles. Nothing fancy; the library only needs
// storage, indexed access and a couple of constructors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), v_(static_cast<size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw Error::validation("matrix dimensions must be non-negative");
  }
  Matrix(int rows, int cols, std::vector<double> data)
      : rows_(rows), cols_(cols), v_(std::move(data)) {
    if (v_.size() != static_cast<size_t>(rows) * cols)
      throw Error::validation("matrix data size does not match dimensions");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& at(int r, int c) { return v_[static_cast<size_t>(r) * cols_ + c]; }
  double at(int r, int c) const { return v_[static_cast<size_t>(r) * cols_ + c]; }
  double& operator()(int r, int c) { return at(r, c); }
  double operator()(int r, int c) const { return at(r, c); }
  const std::vector<double>& data() const { return v_; }
  std::vector<double>& data() { return v_; }

  bool operator==(const Matrix& o) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> v_;
};

// Deterministic RNG. mt19937_64 has a standard-specified output sequence, and
// all mappings below are explicit, so identical seeds give identical streams
// on every platform and standard library.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  // Uniform in [0, 1).
  double uniform() { return std::ldexp(static_cast<double>(eng_() >> 11), -53); }

  // Uniform integer in [0, bound). Mask-and-reject, unbiased.
  int below(int bound) {
    if (bound <= 0) throw Error::validation("Rng::below requires a positive bound");
    uint64_t b = static_cast<uint64_t>(bound);
    uint64_t mask = ~uint64_t{0} >> __builtin_clzll(b | 1);
    for (;;) {
      uint64_t r = eng_() & mask;
      if (r < b) return static_cast<int>(r);
    }
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(below(static_cast<int>(i)));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

namespace detail {

// Runs fn(begin, end) over [0, total) split across worker threads. Serial for
// small totals or when QMATCH_THREADS=1.
void parallel_for(int total, const std::function<void(int, int)>& fn, int min_grain = 1024);

}  // namespace detail

}  // namespace qmatch
