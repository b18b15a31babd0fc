#include "seidel/s6.hpp"

#include <stdexcept>

namespace seidel {

std::string s6_encode(const SeidelMatrix& s) {
  int n = s.order();
  if (n < 1 || n > 62) throw std::invalid_argument("s6 supports orders 1..62 only");
  std::string out;
  std::size_t nbits = SeidelMatrix::tri_count(n);
  out.reserve(1 + (nbits + 5) / 6);
  out.push_back(static_cast<char>(n + 63));
  int group = 0, filled = 0;
  for (std::size_t k = 0; k < nbits; ++k) {
    group = (group << 1) | (s.bit(k) ? 1 : 0);
    if (++filled == 6) {
      out.push_back(static_cast<char>(group + 63));
      group = 0;
      filled = 0;
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

SeidelMatrix s6_decode(const std::string& record) {
  if (record.empty()) throw std::invalid_argument("empty record");
  for (char c : record)
    if (c < 63 || c > 126) throw std::invalid_argument("non-printable byte in record");
  int n = record[0] - 63;
  if (n < 1 || n > 62) throw std::invalid_argument("order out of range");
  std::size_t nbits = SeidelMatrix::tri_count(n);
  std::size_t expect = 1 + (nbits + 5) / 6;
  if (record.size() < expect) throw std::invalid_argument("truncated record");
  if (record.size() > expect) throw std::invalid_argument("overlong record");
  SeidelMatrix s(n);
  for (std::size_t k = 0; k < nbits; ++k) {
    int byte = record[1 + k / 6] - 63;
    if (byte >> (5 - k % 6) & 1) s.set_bit(k, true);
  }
  // padding bits beyond the triangle must be zero
  if (nbits % 6) {
    int last = record.back() - 63;
    int pad = 6 - static_cast<int>(nbits % 6);
    if (last & ((1 << pad) - 1)) throw std::invalid_argument("nonzero padding bits");
  }
  return s;
}

}  // namespace seidel
