#include "holotriple/linop.hpp"

#include <stdexcept>

namespace holo {

SpMat spkron(const SpMat& a, const SpMat& b) {
  SpMat out(a.rows() * b.rows(), a.cols() * b.cols());
  std::vector<Eigen::Triplet<cd>> trip;
  trip.reserve(static_cast<size_t>(a.nonZeros()) * b.nonZeros());
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

SpMat sparse_from_dense(const Mat& m, double drop) {
  SpMat out(m.rows(), m.cols());
  std::vector<Eigen::Triplet<cd>> trip;
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i)
      if (std::abs(m(i, j)) > drop) trip.emplace_back(i, j, m(i, j));
  out.setFromTriplets(trip.begin(), trip.end());
  return out;
}

SparseOperator SparseOperator::leaf(const CompositeSpace* space,
                                    std::vector<KronTerm> terms) {
  for (const auto& t : terms) {
    int prev = -1;
    for (const auto& f : t.factors) {
      if (f.factor <= prev || f.factor >= space->num_factors())
        throw std::invalid_argument("leaf: bad factor list");
      if (f.op.rows() != space->factor_dims[f.factor] ||
          f.op.cols() != space->factor_dims[f.factor])
        throw std::invalid_argument("leaf: block dimension mismatch");
      prev = f.factor;
    }
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::kLeaf;
  n->space = space;
  n->terms = std::move(terms);
  return SparseOperator(std::move(n));
}

SparseOperator SparseOperator::explicit_matrix(const CompositeSpace* space,
                                               SpMat m) {
  if (m.rows() != space->total_dim || m.cols() != space->total_dim)
    throw std::invalid_argument("explicit_matrix: dimension mismatch");
  auto n = std::make_shared<Node>();
  n->kind = Kind::kExplicit;
  n->space = space;
  n->explicit_m = std::move(m);
  return SparseOperator(std::move(n));
}

SparseOperator SparseOperator::identity(const CompositeSpace* space) {
  return leaf(space, {KronTerm{}});
}

SparseOperator SparseOperator::zero(const CompositeSpace* space) {
  return leaf(space, {});
}

SparseOperator SparseOperator::sum(std::vector<SparseOperator> parts) {
  if (parts.empty()) throw std::invalid_argument("sum: empty");
  for (const auto& p : parts)
    if (p.space() != parts[0].space())
      throw std::invalid_argument("sum: space mismatch");
  auto n = std::make_shared<Node>();
  n->kind = Kind::kSum;
  n->space = parts[0].space();
  n->kids = std::move(parts);
  return SparseOperator(std::move(n));
}

SparseOperator SparseOperator::prod(std::vector<SparseOperator> parts) {
  if (parts.empty()) throw std::invalid_argument("prod: empty");
  for (const auto& p : parts)
    if (p.space() != parts[0].space())
      throw std::invalid_argument("prod: space mismatch");
  auto n = std::make_shared<Node>();
  n->kind = Kind::kProd;
  n->space = parts[0].space();
  n->kids = std::move(parts);
  return SparseOperator(std::move(n));
}

const CompositeSpace* SparseOperator::space() const {
  return node_ ? node_->space : nullptr;
}

void apply_local(const CompositeSpace& space, int factor, const SpMat& op,
                 const Vec& x, Vec& y, cd scale) {
  long d = space.factor_dims[factor];
  long r = space.strides[factor];
  long blocks = space.total_dim / (d * r);
  for (long l = 0; l < blocks; ++l) {
    long base = l * d * r;
    for (int j = 0; j < op.outerSize(); ++j)
      for (SpMat::InnerIterator it(op, j); it; ++it)
        y.segment(base + it.row() * r, r) +=
            (scale * it.value()) * x.segment(base + it.col() * r, r);
  }
}

Vec SparseOperator::apply(const Vec& x) const {
  const Node& n = *node_;
  if (x.size() != n.space->total_dim)
    throw std::invalid_argument("apply: vector length mismatch");
  switch (n.kind) {
    case Kind::kExplicit:
      return n.explicit_m * x;
    case Kind::kSum: {
      Vec y = Vec::Zero(x.size());
      for (const auto& k : n.kids) y += k.apply(x);
      return y;
    }
    case Kind::kProd: {
      Vec y = x;
      for (auto it = n.kids.rbegin(); it != n.kids.rend(); ++it)
        y = it->apply(y);
      return y;
    }
    case Kind::kLeaf: {
      Vec y = Vec::Zero(x.size());
      for (const auto& t : n.terms) {
        if (t.factors.empty()) {
          y += t.coeff * x;
          continue;
        }
        Vec buf = x;
        for (size_t k = 0; k < t.factors.size(); ++k) {
          Vec nxt = Vec::Zero(x.size());
          cd s = (k == 0) ? t.coeff : cd(1.0);
          apply_local(*n.space, t.factors[k].factor, t.factors[k].op, buf, nxt,
                      s);
          buf.swap(nxt);
        }
        y += buf;
      }
      return y;
    }
  }
  return Vec();
}

SparseOperator SparseOperator::adjoint() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::kExplicit:
      return explicit_matrix(n.space, SpMat(n.explicit_m.adjoint()));
    case Kind::kSum: {
      std::vector<SparseOperator> kids;
      for (const auto& k : n.kids) kids.push_back(k.adjoint());
      return sum(std::move(kids));
    }
    case Kind::kProd: {
      std::vector<SparseOperator> kids;
      for (auto it = n.kids.rbegin(); it != n.kids.rend(); ++it)
        kids.push_back(it->adjoint());
      return prod(std::move(kids));
    }
    case Kind::kLeaf: {
      std::vector<KronTerm> terms;
      for (const auto& t : n.terms) {
        KronTerm a;
        a.coeff = std::conj(t.coeff);
        for (const auto& f : t.factors)
          a.factors.push_back({f.factor, SpMat(f.op.adjoint())});
        terms.push_back(std::move(a));
      }
      return leaf(n.space, std::move(terms));
    }
  }
  return SparseOperator();
}

SparseOperator SparseOperator::scaled(cd c) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::kExplicit:
      return explicit_matrix(n.space, SpMat(c * n.explicit_m));
    case Kind::kSum: {
      std::vector<SparseOperator> kids;
      for (const auto& k : n.kids) kids.push_back(k.scaled(c));
      return sum(std::move(kids));
    }
    case Kind::kProd: {
      std::vector<SparseOperator> kids = n.kids;
      kids[0] = kids[0].scaled(c);
      return prod(std::move(kids));
    }
    case Kind::kLeaf: {
      std::vector<KronTerm> terms = n.terms;
      for (auto& t : terms) t.coeff *= c;
      return leaf(n.space, std::move(terms));
    }
  }
  return SparseOperator();
}

SpMat SparseOperator::materialize(long limit) const {
  const Node& n = *node_;
  long dim = n.space->total_dim;
  if (dim > limit)
    throw std::runtime_error("materialize: space exceeds dimension limit");
  switch (n.kind) {
    case Kind::kExplicit:
      return n.explicit_m;
    case Kind::kSum: {
      SpMat acc(dim, dim);
      for (const auto& k : n.kids) acc = acc + k.materialize(limit);
      return acc;
    }
    case Kind::kProd: {
      SpMat acc = n.kids[0].materialize(limit);
      for (size_t k = 1; k < n.kids.size(); ++k)
        acc = SpMat(acc * n.kids[k].materialize(limit));
      return acc;
    }
    case Kind::kLeaf: {
      SpMat acc(dim, dim);
      for (const auto& t : n.terms) {
        SpMat term(1, 1);
        term.insert(0, 0) = t.coeff;
        size_t next = 0;
        for (int f = 0; f < n.space->num_factors(); ++f) {
          if (next < t.factors.size() && t.factors[next].factor == f) {
            term = spkron(term, t.factors[next].op);
            ++next;
          } else {
            SpMat id(n.space->factor_dims[f], n.space->factor_dims[f]);
            id.setIdentity();
            term = spkron(term, id);
          }
        }
        acc = acc + term;
      }
      return acc;
    }
  }
  return SpMat();
}

Mat SparseOperator::dense(long limit) const { return Mat(materialize(limit)); }

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
  return SparseOperator::sum({a, b});
}

SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) {
  return SparseOperator::sum({a, b.scaled(-1.0)});
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
  return SparseOperator::prod({a, b});
}

SparseOperator operator*(cd c, const SparseOperator& a) { return a.scaled(c); }

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) {
  return a * b - b * a;
}

SparseOperator anticommutator(const SparseOperator& a,
                              const SparseOperator& b) {
  return a * b + b * a;
}

SparseOperator factor_permutation(const CompositeSpace* space,
                                  const std::vector<int>& perm, long limit) {
  int nf = space->num_factors();
  if (static_cast<int>(perm.size()) != nf)
    throw std::invalid_argument("factor_permutation: size mismatch");
  std::vector<int> seen(nf, 0);
  for (int k = 0; k < nf; ++k) {
    if (perm[k] < 0 || perm[k] >= nf || seen[perm[k]]++)
      throw std::invalid_argument("factor_permutation: not a permutation");
    if (space->factor_dims[perm[k]] != space->factor_dims[k])
      throw std::invalid_argument("factor_permutation: dim mismatch");
  }
  long dim = space->total_dim;
  if (dim > limit)
    throw std::runtime_error("factor_permutation: space exceeds limit");
  SpMat m(dim, dim);
  std::vector<Eigen::Triplet<cd>> trip;
  std::vector<long> idx(nf);
  for (long src = 0; src < dim; ++src) {
    long rem = src;
    for (int k = 0; k < nf; ++k) {
      idx[k] = rem / space->strides[k];
      rem %= space->strides[k];
    }
    long dst = 0;
    for (int k = 0; k < nf; ++k) dst += idx[k] * space->strides[perm[k]];
    trip.emplace_back(dst, src, cd(1.0));
  }
  m.setFromTriplets(trip.begin(), trip.end());
  return SparseOperator::explicit_matrix(space, std::move(m));
}

}  // namespace holo
