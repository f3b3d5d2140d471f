#include "holotriple/clifford.hpp"

#include <stdexcept>

#include "holotriple/su2.hpp"

namespace holo {

namespace {

SpMat sparse2(const Mat2& m) {
  SpMat s(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (m(i, j) != cd(0.0)) s.insert(i, j) = m(i, j);
  s.makeCompressed();
  return s;
}

SpMat spkron(const SpMat& a, const SpMat& b) {
  SpMat out(a.rows() * b.rows(), a.cols() * b.cols());
  std::vector<Eigen::Triplet<cd>> trip;
  for (int ka = 0; ka < a.outerSize(); ++ka)
    for (SpMat::InnerIterator ia(a, ka); ia; ++ia)
      for (int kb = 0; kb < b.outerSize(); ++kb)
        for (SpMat::InnerIterator ib(b, kb); ib; ++ib)
          trip.emplace_back(ia.row() * b.rows() + ib.row(),
                            ia.col() * b.cols() + ib.col(),
                            ia.value() * ib.value());
  out.setFromTriplets(trip.begin(), trip.end());
  return out;
}

}  // namespace

CliffordFactor clifford_generators(int k) {
  if (k < 1) throw std::invalid_argument("clifford_generators: k < 1");
  CliffordFactor f;
  f.num_gens = k;
  if (k == 1) {
    f.dim = 2;
    f.gens = {sparse2(sigma(2))};
    return f;
  }
  int q = k / 2;
  f.dim = 1L << q;
  SpMat id1(1, 1);
  id1.insert(0, 0) = 1.0;
  SpMat s1 = sparse2(sigma(0)), s2 = sparse2(sigma(1)), s3 = sparse2(sigma(2));
  auto chain = [&](const SpMat& mid, int pos) {
    SpMat acc = id1;
    for (int i = 0; i < pos; ++i) acc = spkron(acc, s3);
    acc = spkron(acc, mid);
    SpMat id2(2, 2);
    id2.setIdentity();
    for (int i = pos + 1; i < q; ++i) acc = spkron(acc, id2);
    return acc;
  };
  for (int i = 0; i < q; ++i) {
    f.gens.push_back(chain(s1, i));
    f.gens.push_back(chain(s2, i));
  }
  if (k % 2 == 1) {
    SpMat acc = id1;
    for (int i = 0; i < q; ++i) acc = spkron(acc, s3);
    f.gens.push_back(acc);
  }
  return f;
}

}  // namespace holo
