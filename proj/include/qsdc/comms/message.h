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

// Symbol framing for the dense-coding alphabet.
//
// With N users there are N - 1 senders. Per symbol, u1 contributes two bits
// through {00:I, 01:X, 10:Y, 11:Z} and every other sender one bit through
// {0:I, 1:X}, so a symbol carries N bits.

#pragma once

#include <string>
#include <vector>

#include "qsdc/qcore/types.h"

namespace qsdc::comms {

/// Bits contributed by each sender, u1 first.
std::vector<int> sender_widths(int n_users);

/// Bits per symbol for N users.
int symbol_width(int n_users);

/// Widths that give every sender but the last two bits and the last one
/// bit. Identical to sender_widths() for N <= 3; kept for comparison.
std::vector<int> alternate_widths(int n_users);

/// Pauli per sender for one symbol. Throws std::invalid_argument when
/// `bits` does not match `widths` or holds anything but '0'/'1'.
std::vector<qcore::PauliOp> encode_symbol(const std::string& bits, const std::vector<int>& widths);
std::vector<qcore::PauliOp> encode_symbol(const std::string& bits, int n_users);

/// Inverse of encode_symbol for ops drawn from each sender's alphabet.
std::string ops_to_bits(const std::vector<qcore::PauliOp>& ops, const std::vector<int>& widths);

/// Accepts a bit string ("100111") or hex with a 0x prefix ("0x9c").
std::string parse_message(const std::string& text);

/// Splits `bits` into symbols of `width`, zero-padding the tail.
/// `pad_len` receives the number of padding bits.
std::vector<std::string> frame_message(const std::string& bits, int width, std::size_t& pad_len);

}  // namespace qsdc::comms
