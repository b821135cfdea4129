#include "clusterforge/pauli.hpp"

namespace clusterforge {

PauliString PauliString::from_string(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  PauliString p(text.size());
  p.negative_ = negative;
  for (std::size_t q = 0; q < text.size(); ++q) p.set_letter(q, text[q]);
  return p;
}

void PauliString::set_letter(std::size_t q, char l) {
  switch (l) {
    case 'I': set_x(q, false); set_z(q, false); break;
    case 'X': set_x(q, true);  set_z(q, false); break;
    case 'Z': set_x(q, false); set_z(q, true);  break;
    case 'Y': set_x(q, true);  set_z(q, true);  break;
    default: throw std::invalid_argument("bad Pauli letter");
  }
}

std::string PauliString::str() const {
  std::string out;
  out.reserve(n_ + 1);
  out.push_back(negative_ ? '-' : '+');
  for (std::size_t q = 0; q < n_; ++q) out.push_back(letter(q));
  return out;
}

}  // namespace clusterforge
