#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gswitch/groups/colour_group.hpp"
#include "gswitch/ramsey/classical.hpp"
#include "gswitch/ramsey/target.hpp"
#include "gswitch/ramsey/verify.hpp"

namespace gswitch {

struct BoundCertificate;

enum class BoundSide { lower, upper, exact };

const char* to_string(BoundSide s);

/// One rule that fired, the bound it gives, and what it consumed.
struct RuleApplication {
  std::string rule;       // stable identifier, e.g. "transitive-apex"
  std::string statement;  // the rule in words
  BoundSide side = BoundSide::upper;
  int value = 0;
  std::vector<std::string> constants;  // classical entries, with citations
  std::optional<std::string> witness;  // lower-bound witness reference
  std::vector<std::shared_ptr<const BoundCertificate>> premises;
};

/// Interval for R_Γ(target) with every rule application that produced it.
struct BoundCertificate {
  std::string group;
  RamseyTarget target;
  int lo = 0;
  std::optional<int> hi;  // nullopt: no upper bound known
  std::vector<RuleApplication> rules;
  std::string table_version = kClassicalTableVersion;

  bool exact() const { return hi && *hi == lo; }
  /// Rules attaining lo / hi (first in application order).
  const RuleApplication* lower_rule() const;
  const RuleApplication* upper_rule() const;
};

/// Target rewrite for the cyclic group on m colours: for even m, every
/// even-indexed (0-based) entry becomes the minimum over even indices and
/// every odd-indexed one the minimum over odd indices; for odd m every
/// entry becomes the overall minimum.
RamseyTarget cyclic_collapse(const RamseyTarget& t);

/// Closes the rule set over (group, target). Memoised on the exact group
/// element set and the exact target; safe to call from several threads.
class BoundEngine {
 public:
  /// `witnesses` must already be verified (see verify_lower_witness).
  explicit BoundEngine(std::vector<LowerWitness> witnesses = {});

  std::shared_ptr<const BoundCertificate> derive(const ColourGroup& group,
                                                 const RamseyTarget& target);

 private:
  std::shared_ptr<const BoundCertificate> compute(const ColourGroup& group,
                                                  const RamseyTarget& target);
  void add_lower_rules(const ColourGroup& group, BoundCertificate& cert);
  void add_upper_rules(const ColourGroup& group, BoundCertificate& cert);

  std::vector<LowerWitness> witnesses_;
  std::mutex mutex_;
  std::unordered_map<std::string, std::shared_ptr<const BoundCertificate>> memo_;
};

/// Throws std::invalid_argument when the target length differs from the
/// group degree.
BoundCertificate derive_bounds(const ColourGroup& group, const RamseyTarget& target,
                               const std::vector<LowerWitness>& witnesses = {});

}  // namespace gswitch
