// Copyright 2026 The QSDC Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsdc/comms/message.h"

#include <cctype>
#include <stdexcept>

namespace qsdc::comms {
namespace {

void require_users(int n_users) {
  if (n_users < 2) throw std::invalid_argument("need at least two users");
}

}  // namespace

std::vector<int> sender_widths(int n_users) {
  require_users(n_users);
  std::vector<int> w(static_cast<std::size_t>(n_users - 1), 1);
  w[0] = 2;
  return w;
}

int symbol_width(int n_users) {
  require_users(n_users);
  return n_users;
}

std::vector<int> alternate_widths(int n_users) {
  require_users(n_users);
  std::vector<int> w(static_cast<std::size_t>(n_users - 1), 2);
  if (n_users > 2) w.back() = 1;
  return w;
}

std::vector<qcore::PauliOp> encode_symbol(const std::string& bits, const std::vector<int>& widths) {
  std::size_t total = 0;
  for (int w : widths) {
    if (w != 1 && w != 2) throw std::invalid_argument("sender width must be 1 or 2");
    total += static_cast<std::size_t>(w);
  }
  if (bits.size() != total) {
    throw std::invalid_argument("symbol '" + bits + "' has " + std::to_string(bits.size()) +
                                " bits, expected " + std::to_string(total));
  }
  std::vector<qcore::PauliOp> ops;
  std::size_t pos = 0;
  for (int w : widths) {
    int v = 0;
    for (int k = 0; k < w; ++k) {
      const char c = bits[pos++];
      if (c != '0' && c != '1') throw std::invalid_argument("symbol holds a non-bit: " + bits);
      v = 2 * v + (c - '0');
    }
    ops.push_back(static_cast<qcore::PauliOp>(v));
  }
  return ops;
}

std::vector<qcore::PauliOp> encode_symbol(const std::string& bits, int n_users) {
  return encode_symbol(bits, sender_widths(n_users));
}

std::string ops_to_bits(const std::vector<qcore::PauliOp>& ops, const std::vector<int>& widths) {
  if (ops.size() != widths.size()) throw std::invalid_argument("one op per sender expected");
  std::string out;
  for (std::size_t k = 0; k < ops.size(); ++k) {
    const int v = static_cast<int>(ops[k]);
    if (v >= (1 << widths[k])) {
      throw std::invalid_argument(qcore::to_string(ops[k]) + " is outside the sender's alphabet");
    }
    for (int b = widths[k] - 1; b >= 0; --b) out.push_back(((v >> b) & 1) ? '1' : '0');
  }
  return out;
}

std::string parse_message(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty message");
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    std::string out;
    for (std::size_t k = 2; k < text.size(); ++k) {
      const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(text[k])));
      int v;
      if (c >= '0' && c <= '9') {
        v = c - '0';
      } else if (c >= 'a' && c <= 'f') {
        v = c - 'a' + 10;
      } else {
        throw std::invalid_argument("bad hex digit in message: " + text);
      }
      for (int b = 3; b >= 0; --b) out.push_back(((v >> b) & 1) ? '1' : '0');
    }
    return out;
  }
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("message is neither bits nor 0x hex: " + text);
  }
  return text;
}

std::vector<std::string> frame_message(const std::string& bits, int width, std::size_t& pad_len) {
  if (width < 1) throw std::invalid_argument("symbol width must be positive");
  const std::size_t w = static_cast<std::size_t>(width);
  pad_len = (w - bits.size() % w) % w;
  const std::string padded = bits + std::string(pad_len, '0');
  std::vector<std::string> out;
  for (std::size_t k = 0; k < padded.size(); k += w) out.push_back(padded.substr(k, w));
  return out;
}

}  // namespace qsdc::comms
