#ifndef IVO_SYSTEM_HPP
#define IVO_SYSTEM_HPP

#include <functional>

#include "ivo/sic.hpp"

namespace ivo {

enum class UnitStatus : uint8_t { Active, Satisfied };

// Per-node constraint state: statuses and SIC parameter domains mutate as the
// search descends, so nodes carry independent copies.
struct ConstraintSystem {
  std::vector<Constraint> constraints;
  std::vector<SIConstraint> sics;
  std::vector<UnitStatus> cstatus;
  std::vector<UnitStatus> sstatus;

  void reset_status() {
    cstatus.assign(constraints.size(), UnitStatus::Active);
    sstatus.assign(sics.size(), UnitStatus::Active);
  }
  bool all_satisfied() const {
    for (auto s : cstatus)
      if (s == UnitStatus::Active) return false;
    for (auto s : sstatus)
      if (s == UnitStatus::Active) return false;
    return true;
  }
  int active_count() const {
    int k = 0;
    for (auto s : cstatus) k += s == UnitStatus::Active;
    for (auto s : sstatus) k += s == UnitStatus::Active;
    return k;
  }
};

struct FixedPointOptions {
  double eta = 0.8;            // wake threshold: rewake when w' < eta * w
  bool use_mohc = false;       // MohcRevise instead of HC4Revise per constraint
  SicStrategy sic_strategy = SicStrategy::Shave;
  int max_pops = 20000;
};

// Queue-driven propagation over all active constraints and SICs.
ContractOutcome fixed_point(ConstraintSystem& sys, const Box& b, const FixedPointOptions& opt);

// Full-system sub-contraction used by the shaving operators.
using SubContractor = std::function<ContractOutcome(ConstraintSystem&, const Box&)>;

SubContractor hc4_subcontractor(const FixedPointOptions& opt);

// 3B: refute extremal slices of each variable with the sub-contraction.
ContractOutcome shave_3b(const ConstraintSystem& sys, const Box& b, int s3b,
                         const SubContractor& sub, Box* out);

// CID: replace the box by the hull of the contracted slices of each variable.
ContractOutcome shave_cid(const ConstraintSystem& sys, const Box& b, int scid,
                          const SubContractor& sub, Box* out);

// 3BCID: extremal refutation at s3b granularity, then CID hull on the rest.
ContractOutcome threeb_cid(const ConstraintSystem& sys, const Box& b, int s3b, int scid,
                           const SubContractor& sub, Box* out);

} // namespace ivo

#endif
