#include "rpsforge/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace rps {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct PendingBox {
  Box box;
  unsigned depth;
};

}  // namespace

std::string to_string(Verdict v) { return v == Verdict::ProvedEmpty ? "ProvedEmpty" : "Undecided"; }

bool SweepReport::all_proved() const {
  return complete && certificates.size() == expected &&
         std::all_of(certificates.begin(), certificates.end(),
                     [](const InfeasibilityCertificate& c) { return c.verdict == Verdict::ProvedEmpty; });
}

InfeasibilityCertificate certify_empty(std::span<const Constraint> system, const CertificateOptions& options) {
  if (!(options.delta > 0.0 && options.delta < 0.5)) throw DomainError("delta must lie in (0, 1/2)");
  const auto start = Clock::now();

  std::vector<IntervalPolynomial> enclosures;
  enclosures.reserve(system.size());
  for (const auto& c : system) enclosures.emplace_back(c.poly);

  InfeasibilityCertificate cert;
  cert.delta = options.delta;
  cert.pruned_by.assign(system.size(), 0);

  const Interval side{options.delta, 1.0 - options.delta};
  std::vector<PendingBox> stack{{Box{side, side}, 0}};
  while (!stack.empty()) {
    if (cert.boxes >= options.max_boxes) {
      cert.budget_exhausted = true;
      break;
    }
    if (options.deadline && (cert.boxes & 0xfff) == 0 && Clock::now() > *options.deadline) {
      cert.budget_exhausted = true;
      break;
    }
    const PendingBox current = stack.back();
    stack.pop_back();
    ++cert.boxes;
    cert.max_depth = std::max(cert.max_depth, current.depth);

    bool pruned = false;
    for (std::size_t i = 0; i < system.size() && !pruned; ++i) {
      const Interval v = enclosures[i].enclose(current.box);
      pruned = system[i].kind == ConstraintKind::Equality ? !v.contains_zero() : v.strictly_negative();
      if (pruned) ++cert.pruned_by[i];
    }
    if (pruned) continue;

    if (current.depth >= options.max_depth) {
      ++cert.undecided_boxes;
      if (cert.surviving.size() < options.max_reported) cert.surviving.push_back(current.box);
      continue;
    }
    Box lo = current.box, hi = current.box;
    if (current.box.r.width() >= current.box.s.width()) {
      const double mid = current.box.r.mid();
      lo.r.hi = mid;
      hi.r.lo = mid;
    } else {
      const double mid = current.box.s.mid();
      lo.s.hi = mid;
      hi.s.lo = mid;
    }
    stack.push_back({hi, current.depth + 1});
    stack.push_back({lo, current.depth + 1});
  }

  cert.undecided_boxes += stack.size();
  cert.verdict = (cert.undecided_boxes == 0 && !cert.budget_exhausted) ? Verdict::ProvedEmpty : Verdict::Undecided;
  cert.millis = elapsed_ms(start);
  return cert;
}

InfeasibilityCertificate infeasibility_certificate(unsigned k, unsigned t, const CertificateOptions& options) {
  if (!(options.delta > 0.0 && options.delta <= 0.01)) throw DomainError("delta must lie in (0, 0.01]");
  if (options.max_depth > 60) throw DomainError("max_depth must be at most 60");
  const auto system = constraint_system(k, t);
  auto cert = certify_empty(system, options);
  cert.k = k;
  cert.t = t;
  return cert;
}

SweepReport sweep(const SweepOptions& options, const std::function<void(const InfeasibilityCertificate&)>& progress) {
  if (options.k_max < 1) throw DomainError("k_max must be at least 1");
  const auto start = Clock::now();
  const auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(options.budget_seconds));

  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned k = 1; k <= options.k_max; ++k) {
    for (unsigned t = 0; t <= options.t_max; ++t) pairs.emplace_back(k, t);
  }

  CertificateOptions cert_options;
  cert_options.delta = options.delta;
  cert_options.max_depth = options.max_depth;
  cert_options.deadline = deadline;

  std::vector<std::optional<InfeasibilityCertificate>> results(pairs.size());
  std::atomic<std::size_t> next{0};
  std::mutex progress_mutex;
  const auto worker = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      if (Clock::now() > deadline) return;
      auto cert = infeasibility_certificate(pairs[i].first, pairs[i].second, cert_options);
      if (cert.budget_exhausted && Clock::now() > deadline) return;
      if (progress) {
        std::lock_guard lock(progress_mutex);
        progress(cert);
      }
      results[i] = std::move(cert);
    }
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(pairs.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker);
  }

  SweepReport report;
  report.expected = pairs.size();
  for (auto& r : results) {
    if (r) report.certificates.push_back(std::move(*r));
  }
  report.complete = report.certificates.size() == report.expected;
  report.millis = elapsed_ms(start);
  return report;
}

}  // namespace rps
