#pragma once

#include "holotriple/types.hpp"

// Matrix exponential by scaling-and-squaring on a plain Taylor series.
// Slow and simple on purpose: reference route only.
namespace oracle {

inline holo::Mat series_exp(const holo::Mat& a) {
  holo::Mat b = a;
  int squarings = 0;
  while (b.norm() > 0.5) {
    b *= 0.5;
    ++squarings;
  }
  holo::Mat term = holo::Mat::Identity(a.rows(), a.cols());
  holo::Mat sum = term;
  for (int k = 1; k <= 40; ++k) {
    term = (term * b) / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

}  // namespace oracle
