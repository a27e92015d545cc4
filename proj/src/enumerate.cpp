#include "enumerate.hpp"

#include <unordered_map>
#include <utility>

#include "bounded_cooc.hpp"
#include "bounded_dim.hpp"
#include "errors.hpp"
#include "extremal.hpp"
#include "flashlight.hpp"
#include "oracle.hpp"
#include "union_enum.hpp"

namespace sigenum {

namespace {

Engine to_engine(EngineChoice c) {
  switch (c) {
    case EngineChoice::two_sat:
      return Engine::two_sat;
    case EngineChoice::horn:
      return Engine::horn;
    case EngineChoice::dpll:
      return Engine::dpll;
    default:
      throw UsageError("engine choice not resolved");
  }
}

EngineChoice pick_engine(const Cnf& cnf, EngineChoice requested) {
  if (requested != EngineChoice::automatic) return requested;
  FormulaStats s = stats(cnf);
  if (s.two_cnf) return EngineChoice::two_sat;
  if (s.horn) return EngineChoice::horn;
  throw UsageError(
      "formula is neither 2-CNF nor Horn; pass --engine dpll for general mode "
      "or use another algorithm");
}

Algo pick_algo(const Cnf& cnf, Algo requested) {
  if (requested != Algo::automatic) return requested;
  switch (classify(cnf)) {
    case FormulaClass::monotone:
      return Algo::monotone;
    case FormulaClass::two_cnf:
    case FormulaClass::horn:
      return Algo::flashlight;
    default:
      return Algo::bounded_dim;
  }
}

struct Session {
  const Cnf& raw;
  const EnumerateOptions& opts;
  const EmitSink& sink;

  Cnf cnf;                         // normalized working formula
  std::vector<bool> mask;          // tautology mask over raw coordinates
  bool lifted = false;
  RunResult result;
  std::uint64_t index = 0;

  Session(const Cnf& raw_in, const EnumerateOptions& opts_in, const EmitSink& sink_in)
      : raw(raw_in), opts(opts_in), sink(sink_in) {
    NormalizeResult nr = normalize(raw);
    cnf = std::move(nr.cnf);
    mask = std::move(nr.tautology_mask);
    lifted = nr.removed > 0;
  }

  // Lift to raw coordinates, verify the witness, forward to the consumer.
  bool deliver(const Signature& sig, const Assignment& wit) {
    EmitRecord record;
    record.signature = lifted ? lift_with_mask(sig, mask) : sig;
    record.witness = wit;
    if (signature_of(raw, record.witness) != record.signature)
      throw InvariantError("emitted witness does not reproduce its signature");
    record.index = index++;
    record.sat_calls = result.counters.sat_calls;
    record.work = result.counters.work;
    bool keep_going = sink(record);
    if (opts.max_outputs > 0 && index >= opts.max_outputs) keep_going = false;
    return keep_going;
  }

  bool run_full(Algo algo, const Cnf& target, const SignatureSink& out) {
    EnumCounters* counters = &result.counters;
    switch (algo) {
      case Algo::brute: {
        OracleOptions oopts;
        oopts.max_vars = opts.max_brute_vars;
        for (auto& [sig, wit] : brute_force_signatures(target, oopts)) {
          ++counters->emitted;
          if (!out(sig, wit)) return false;
        }
        return true;
      }
      case Algo::flashlight: {
        result.engine_used = pick_engine(target, opts.engine);
        SatOracle oracle(to_engine(result.engine_used));
        return enumerate_flashlight(target, oracle, out, counters);
      }
      case Algo::bounded_dim: {
        BoundedDimOptions bopts;
        bopts.max_seed_vars = opts.max_core_vars;
        return enumerate_bounded_dim(target, out, bopts, counters);
      }
      case Algo::bounded_cooc: {
        BoundedCoocOptions copts;
        copts.max_core_vars = opts.max_core_vars;
        return enumerate_bounded_cooc(target, out, copts, counters);
      }
      case Algo::monotone:
        return monotone_signatures(target, out, counters);
      default:
        throw UsageError("algorithm choice not resolved");
    }
  }

  void run() {
    SignatureSink out = [this](const Signature& sig, const Assignment& wit) {
      return deliver(sig, wit);
    };

    switch (opts.mode) {
      case Mode::all: {
        result.algo_used = pick_algo(cnf, opts.algo);
        result.completed = run_full(result.algo_used, cnf, out);
        return;
      }
      case Mode::minimal: {
        if (opts.algo == Algo::automatic) {
          result.completed = enumerate_minimal_signatures(cnf, out, &result.counters);
          return;
        }
        // any full enumerator doubles as a cross-checking source
        result.algo_used = opts.algo;
        auto [sigs, wits] = collect(opts.algo);
        std::vector<Signature> minimal = brute_force_extremal(sigs, ExtremalDirection::minimal);
        result.completed = emit_filtered(minimal, wits, out);
        return;
      }
      case Mode::maximal: {
        Algo source = opts.algo == Algo::automatic ? pick_algo(cnf, Algo::automatic) : opts.algo;
        result.algo_used = source;
        auto [sigs, wits] = collect(source);
        std::vector<Signature> maximal = brute_force_extremal(sigs, ExtremalDirection::maximal);
        result.completed = emit_filtered(maximal, wits, out);
        return;
      }
    }
  }

  std::pair<std::vector<Signature>, std::unordered_map<Signature, Assignment, SignatureHash>>
  collect(Algo algo) {
    std::vector<Signature> sigs;
    std::unordered_map<Signature, Assignment, SignatureHash> wits;
    run_full(algo, cnf, [&](const Signature& sig, const Assignment& wit) {
      if (sigs.size() >= opts.max_collected)
        throw ResourceLimitError("extremal filter collected more than " +
                                 std::to_string(opts.max_collected) + " signatures");
      sigs.push_back(sig);
      wits.emplace(sig, wit);
      return true;
    });
    return {std::move(sigs), std::move(wits)};
  }

  bool emit_filtered(const std::vector<Signature>& sigs,
                     const std::unordered_map<Signature, Assignment, SignatureHash>& wits,
                     const SignatureSink& out) {
    for (const Signature& sig : sigs) {
      ++result.counters.emitted;
      if (!out(sig, wits.at(sig))) return false;
    }
    return true;
  }
};

}  // namespace

RunResult run_enumeration(const Cnf& formula, const EnumerateOptions& opts,
                          const EmitSink& sink) {
  Session session(formula, opts, sink);
  session.run();
  return session.result;
}

SignatureStream::SignatureStream(Producer producer, std::size_t capacity)
    : capacity_(capacity == 0 ? 1 : capacity) {
  worker_ = std::thread([this, producer = std::move(producer)] {
    RunResult local;
    std::exception_ptr error;
    try {
      local = producer([this](const EmitRecord& record) { return emit(record); });
    } catch (...) {
      error = std::current_exception();
    }
    std::lock_guard<std::mutex> lock(mutex_);
    result_ = std::move(local);
    error_ = error;
    done_ = true;
    consumer_cv_.notify_all();
  });
}

SignatureStream::~SignatureStream() {
  close();
  if (worker_.joinable()) worker_.join();
}

bool SignatureStream::emit(const EmitRecord& record) {
  std::unique_lock<std::mutex> lock(mutex_);
  producer_cv_.wait(lock, [this] { return buffer_.size() < capacity_ || closed_; });
  if (closed_) return false;
  buffer_.push_back(record);
  consumer_cv_.notify_one();
  return true;
}

std::optional<EmitRecord> SignatureStream::next() {
  std::unique_lock<std::mutex> lock(mutex_);
  consumer_cv_.wait(lock, [this] { return !buffer_.empty() || done_ || closed_; });
  if (!buffer_.empty()) {
    EmitRecord record = std::move(buffer_.front());
    buffer_.pop_front();
    ++delivered_;
    producer_cv_.notify_one();
    return record;
  }
  if (error_) {
    std::exception_ptr e = error_;
    error_ = nullptr;
    std::rethrow_exception(e);
  }
  return std::nullopt;
}

void SignatureStream::close() {
  std::lock_guard<std::mutex> lock(mutex_);
  closed_ = true;
  producer_cv_.notify_all();
  consumer_cv_.notify_all();
}

SignatureStream::Progress SignatureStream::progress() const {
  std::lock_guard<std::mutex> lock(mutex_);
  Progress p;
  p.delivered = delivered_;
  p.finished = done_;
  if (done_) p.totals = result_.counters;
  return p;
}

}  // namespace sigenum
