#pragma once

#include <stdexcept>
#include <vector>

#include "findim/dg.hpp"

namespace findim {

/// Generators added while killing the cone cohomology in one degree.
struct EngineStage {
  int degree = 0;
  int added = 0;
};

/// Semifree F with a map F -> T whose cone is acyclic in degrees >= window.
/// F agrees with T in cohomology above the window, and everywhere when
/// terminated.
struct SemifreeResolution {
  SemifreeModule F;
  SemifreeMap phi;
  bool terminated = false;
  int window = 0;
  std::vector<EngineStage> stages;
};

inline constexpr int kMaxGenerators = 4000;

/// Generator limit used when resolve() is called without one; process-wide.
int generator_budget();
void set_generator_budget(int n);

/// Sets the generator budget for its lifetime and restores the previous one.
class GeneratorBudgetScope {
 public:
  explicit GeneratorBudgetScope(int n) : saved_(generator_budget()) { set_generator_budget(n); }
  ~GeneratorBudgetScope() { set_generator_budget(saved_); }
  GeneratorBudgetScope(const GeneratorBudgetScope&) = delete;
  GeneratorBudgetScope& operator=(const GeneratorBudgetScope&) = delete;

 private:
  int saved_;
};

/// A requested window could not be reached within the generator limit.
class CutoffError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Builds F degree by degree from sup(T) down: in each degree c, minimal
/// generators of H^c(cone) are added as generators of F in degree c.
/// A nonpositive max_generators means generator_budget().
SemifreeResolution resolve(const DGComponents& T, int window, int max_generators = 0);

/// One derived-projective cover P -> M[sup M] on one factor, and the
/// co-cone N with triangle N -> P -> M[sup M] -> N[1].
struct SppjStage {
  int index = 0;
  int sup = 0;
  SemifreeModule P;
  SemifreeMap f;
  DGComponents target;  // M[sup M]
  DGComponents N;
};

SppjStage sppj_step(const DGModule& M, int factor = 0, int index = 0);

/// Semifree replacement of one factor part, certified in degrees > lo; an
/// exact semifree part is returned unchanged.
FactorModule resolve_part(const FactorModule& part, int lo);
/// Semifree replacement of every factor part, certified in degrees > lo.
/// Parts that are already semifree and exact are returned unchanged.
DGModule semifree_resolution(const DGModule& M, int lo);

/// H^0(A) ⊗_A F for a semifree F, as a free complex over H^0(A).
Complex base_change_h0(const SemifreeModule& F);
/// H^0(A) ⊗^L_A M on one factor; cohomology certified in degrees >= lo.
Complex reduce_to_h0(const DGModule& M, int factor, int lo);
/// RHom_A(H^0(A), M) on one factor as a complex of base-ring modules;
/// cohomology certified in degrees <= hi.
Complex coreduce_to_h0(const DGModule& M, int factor, int hi);
/// RHom_A(X, M) on one factor, certified in degrees <= hi.
Complex rhom(const DGModule& X, const DGModule& M, int factor, int hi);
/// X ⊗^L_A M on one factor, certified in degrees >= lo.
Complex derived_tensor(const DGModule& X, const DGModule& M, int factor, int lo);

}  // namespace findim
