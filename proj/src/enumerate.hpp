#pragma once

#include <condition_variable>
#include <cstdint>
#include <deque>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>

#include "counters.hpp"
#include "formula.hpp"
#include "sat.hpp"

namespace sigenum {

enum class Algo { automatic, brute, flashlight, bounded_dim, bounded_cooc, monotone };
enum class EngineChoice { automatic, two_sat, horn, dpll };
enum class Mode { all, minimal, maximal };

struct EnumerateOptions {
  Algo algo = Algo::automatic;
  EngineChoice engine = EngineChoice::automatic;
  Mode mode = Mode::all;
  int max_core_vars = 24;            // 2^{n'} sweep guard (bounded-dim/cooc)
  int max_brute_vars = 20;           // brute-force oracle guard
  std::uint64_t max_outputs = 0;     // 0 = unlimited
  std::uint64_t max_collected = std::uint64_t(1) << 22;  // maximal-mode guard
};

struct EmitRecord {
  Signature signature;   // full coordinates, tautological clauses re-inserted
  Assignment witness;    // total assignment reproducing the signature
  std::uint64_t index = 0;
  std::uint64_t sat_calls = 0;  // counter totals at emission time
  std::uint64_t work = 0;
};

using EmitSink = std::function<bool(const EmitRecord&)>;

struct RunResult {
  Algo algo_used = Algo::automatic;
  EngineChoice engine_used = EngineChoice::automatic;  // flashlight runs only
  EnumCounters counters;
  bool completed = true;  // false when the consumer stopped early
};

// Front door shared by the C API and the CLI. Normalizes the formula,
// dispatches to the selected algorithm, re-inserts masked (tautological)
// coordinates and re-verifies every witness against its signature before it
// leaves the library.
RunResult run_enumeration(const Cnf& formula, const EnumerateOptions& opts,
                          const EmitSink& sink);

// Pull adapter over a producer callback: the producer runs on a worker
// thread and blocks on a bounded hand-off queue when the consumer lags.
class SignatureStream {
 public:
  using Producer = std::function<RunResult(const EmitSink&)>;

  explicit SignatureStream(Producer producer, std::size_t capacity = 16);
  ~SignatureStream();

  SignatureStream(const SignatureStream&) = delete;
  SignatureStream& operator=(const SignatureStream&) = delete;

  // Blocks for the next record; nullopt once the producer finished or the
  // stream was closed. Producer exceptions resurface here.
  std::optional<EmitRecord> next();

  void close();

  struct Progress {
    std::uint64_t delivered = 0;
    bool finished = false;
    EnumCounters totals;  // meaningful once finished
  };
  Progress progress() const;

 private:
  bool emit(const EmitRecord& record);

  mutable std::mutex mutex_;
  std::condition_variable consumer_cv_, producer_cv_;
  std::deque<EmitRecord> buffer_;
  std::size_t capacity_;
  bool closed_ = false;
  bool done_ = false;
  std::uint64_t delivered_ = 0;
  std::exception_ptr error_;
  RunResult result_;
  std::thread worker_;
};

}  // namespace sigenum
