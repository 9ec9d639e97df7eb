#include "nielsen/reidemeister.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace nielsen {

namespace {

IntVector unit(std::size_t q, std::size_t k, long sign) {
  IntVector e(q, Integer(0));
  e[k - 1] = sign;
  return e;
}

}  // namespace

std::size_t SigmaClassReport::class_of(std::size_t i) const {
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (std::binary_search(classes[c].members.begin(), classes[c].members.end(), i)) return c;
  throw Error(ErrorCode::InvalidArgument, "factor " + std::to_string(i) + " is in no sigma-class");
}

SigmaClass sigma_class_from(const PsiData& data, std::size_t i) {
  const std::size_t q = data.q();
  SigmaClass out;
  out.representative = i;
  out.transversal.emplace(i, IntVector(q, Integer(0)));

  // Breadth-first over generator moves e_1, -e_1, e_2, -e_2, ...; the first
  // word to reach a factor is kept.
  std::deque<std::size_t> frontier{i};
  while (!frontier.empty()) {
    std::size_t j = frontier.front();
    frontier.pop_front();
    for (std::size_t k = 1; k <= q; ++k) {
      for (long sign : {+1L, -1L}) {
        const Permutation& s = data.sigma(k);
        std::size_t next = sign > 0 ? s(j) : s.inverse()(j);
        if (out.transversal.count(next)) continue;
        out.transversal.emplace(next, out.transversal.at(j) + unit(q, k, sign));
        frontier.push_back(next);
      }
    }
  }

  std::vector<IntVector> schreier;
  for (const auto& [j, t] : out.transversal) {
    out.members.push_back(j);
    for (std::size_t k = 1; k <= q; ++k) {
      std::size_t target = data.sigma(k)(j);
      schreier.push_back(t + unit(q, k, 1) - out.transversal.at(target));
    }
  }
  out.stabilizer = lattice_from_generators(q, schreier);
  return out;
}

SigmaClassReport sigma_classes(const PsiData& data) {
  std::vector<Permutation> gens;
  for (std::size_t k = 1; k <= data.q(); ++k) gens.push_back(data.sigma(k));
  SigmaClassReport report;
  for (const auto& block : orbits(data.n(), closure(data.n(), gens)))
    report.classes.push_back(sigma_class_from(data, block.front()));
  return report;
}

std::vector<IntVector> phi_restricted(const PsiData& data, std::size_t i, const Sublattice& s) {
  std::vector<IntVector> out;
  for (std::size_t r = 0; r < s.rank(); ++r) {
    SemidirectElement g = psi_of(data, s.basis().row(r));
    if (g.perm()(i) != i)
      throw Error(ErrorCode::NotInStabilizer,
                  "basis row " + std::to_string(r + 1) + " moves factor " + std::to_string(i));
    out.push_back(g.translation(i));
  }
  return out;
}

Sublattice image_lattice(const PsiData& data, std::size_t i, const Sublattice& stabilizer) {
  std::vector<IntVector> phi = phi_restricted(data, i, stabilizer);
  std::vector<IntVector> gens;
  for (std::size_t r = 0; r < stabilizer.rank(); ++r)
    gens.push_back(stabilizer.basis().row(r) - phi[r]);
  return lattice_from_generators(data.q(), gens);
}

Count class_count(const PsiData& data, std::size_t i) {
  SigmaClass sc = sigma_class_from(data, i);
  return lattice_index(image_lattice(data, i, sc.stabilizer));
}

const ClassBlock& ReidemeisterReport::block_of(std::size_t factor) const {
  for (const ClassBlock& b : blocks)
    if (std::binary_search(b.sigma.members.begin(), b.sigma.members.end(), factor)) return b;
  throw Error(ErrorCode::InvalidArgument, "factor " + std::to_string(factor) + " is in no block");
}

ReidemeisterReport reidemeister_from_psi(const PsiData& data) {
  ReidemeisterReport report;
  for (SigmaClass& sc : sigma_classes(data).classes) {
    ClassBlock block;
    block.phi_images = phi_restricted(data, sc.representative, sc.stabilizer);
    block.image_lattice = image_lattice(data, sc.representative, sc.stabilizer);
    block.count = lattice_index(block.image_lattice);
    if (block.count.is_finite()) block.representatives = coset_representatives(block.image_lattice);
    block.sigma = std::move(sc);
    report.total = report.total + block.count;
    report.blocks.push_back(std::move(block));
  }
  return report;
}

ReidemeisterReport reidemeister_number(const LiftSystem& sys) {
  return reidemeister_from_psi(validate(sys));
}

ClassLabel classify(const PsiData& data, const ReidemeisterReport& report,
                    const IntVector& alpha, std::size_t i) {
  const ClassBlock& block = report.block_of(i);
  const std::size_t r = block.sigma.representative;
  const IntVector& t = block.sigma.transversal.at(i);
  // [(alpha,i)] = [(beta,r)] with gamma = t: alpha = t + beta + phi_r(-t)
  const IntVector beta = alpha - t - psi_of(data, -t).translation(r);
  return ClassLabel{reduce_modulo(block.image_lattice, beta), r};
}

}  // namespace nielsen
