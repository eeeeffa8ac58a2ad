#include "lsz/basics.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace lsz {

bool is_zero(const Expo& u) {
  return std::all_of(u.begin(), u.end(), [](std::int64_t e) { return e == 0; });
}

Expo add(const Expo& a, const Expo& b) {
  Expo r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool coprime(const Expo& a, const Expo& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

std::string var_name(std::size_t i, std::size_t n) {
  if (n <= 26) return std::string(1, static_cast<char>('a' + i));
  return "x" + std::to_string(i + 1);
}

std::string monomial_string(const Expo& u) {
  const std::size_t n = u.size();
  std::string s;
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    if (!s.empty() && n > 26) s += "*";
    s += var_name(i, n);
    if (u[i] > 1) s += "^" + std::to_string(u[i]);
  }
  return s.empty() ? "1" : s;
}

std::size_t max_threads() {
  static const std::size_t cap = [] {
    if (const char* env = std::getenv("LSZ_THREADS")) {
      long v = std::atol(env);
      if (v >= 1) return static_cast<std::size_t>(v);
      return std::size_t{1};
    }
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<std::size_t>(hw ? hw : 1);
  }();
  return cap;
}

namespace {
thread_local bool inside_parallel = false;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& f) {
  const std::size_t threads = inside_parallel ? 1 : std::min(max_threads(), count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::exception_ptr first_error;
  auto work = [&] {
    inside_parallel = true;
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) break;
      try {
        f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!first_error) first_error = std::current_exception();
        next.store(count);  // drain remaining work
        break;
      }
    }
    inside_parallel = false;
  };
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) workers.emplace_back(work);
  for (auto& w : workers) w.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace lsz
