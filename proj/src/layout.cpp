#include "quivchow/layout.hpp"

namespace quivchow {

VariableLayout::VariableLayout(const DimVector& d) {
  std::size_t offset = 0;
  std::vector<int> root_w;
  std::vector<int> chern_w;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0) throw InputError("dimension vector entries must be nonnegative");
    sizes_.push_back(static_cast<int>(d[i]));
    offsets_.push_back(offset);
    for (int k = 1; k <= d[i]; ++k) {
      vertex_of_.push_back(static_cast<int>(i));
      root_w.push_back(1);
      chern_w.push_back(k);
    }
    offset += static_cast<std::size_t>(d[i]);
  }
  if (offset > Exponents::kMaxVariables)
    throw InputError("sum of dimension vector entries exceeds " +
                     std::to_string(Exponents::kMaxVariables));
  root_weights_ = make_weights(std::move(root_w));
  chern_weights_ = make_weights(std::move(chern_w));
}

std::string VariableLayout::root_name(std::size_t index) const {
  return "xi_" + std::to_string(vertex_of(index)) + "_" + std::to_string(position_of(index));
}

std::string VariableLayout::chern_name(std::size_t index) const {
  return "x_" + std::to_string(vertex_of(index)) + "_" + std::to_string(position_of(index));
}

}  // namespace quivchow
