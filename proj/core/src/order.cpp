// SPDX-License-Identifier: Apache-2.0

#include "forget/order.hpp"

#include <algorithm>

namespace forget {

std::vector<Variable> VariableOrder::arrange(const VarSet& vars) const {
  std::vector<Variable> out = vars.sorted_by_name();
  switch (kind_) {
    case Kind::Ascending:
      break;
    case Kind::Descending:
      std::reverse(out.begin(), out.end());
      break;
    case Kind::Explicit: {
      std::vector<Variable> listed;
      for (Variable v : explicit_)
        if (vars.contains(v) && std::find(listed.begin(), listed.end(), v) == listed.end())
          listed.push_back(v);
      std::erase_if(out, [&](Variable v) {
        return std::find(listed.begin(), listed.end(), v) != listed.end();
      });
      listed.insert(listed.end(), out.begin(), out.end());
      out = std::move(listed);
      break;
    }
  }
  return out;
}

}  // namespace forget
