#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace lsz {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

// Exponent vector of a monomial in N^n. Kept in machine integers; all
// degree/matrix arithmetic is arbitrary precision.
using Expo = std::vector<std::int64_t>;

bool is_zero(const Expo& u);
Expo add(const Expo& a, const Expo& b);
bool coprime(const Expo& a, const Expo& b);

// Variable naming used across reports: a..z for n <= 26, x1..xn otherwise.
std::string var_name(std::size_t i, std::size_t n);
std::string monomial_string(const Expo& u);

// Runs f(0..count-1) on up to LSZ_THREADS workers (hardware default).
// Nested calls degrade to serial execution.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& f);
std::size_t max_threads();

}  // namespace lsz
