/*
 * Copyright 2026 The sumnet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "netspec.hpp"

#include <cctype>

#include "errors.hpp"

namespace sumnet {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NetSpec parse() {
    NetSpec spec = expression();
    skip_space();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input at position " + std::to_string(pos_));
    return spec;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of network expression");
    return text_[pos_];
  }

  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "' at position " + std::to_string(pos_));
    ++pos_;
  }

  std::uint64_t integer() {
    skip_space();
    std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t digit = text_[pos_] - '0';
      if (value > (UINT64_MAX - digit) / 10) throw ParseError("parameter too large");
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected an integer at position " + std::to_string(pos_));
    return value;
  }

  NetSpec expression() {
    const char head = static_cast<char>(std::toupper(static_cast<unsigned char>(peek())));
    ++pos_;
    NetSpec spec;
    switch (head) {
      case 'S': {
        expect('(');
        spec.kind = NetSpec::Kind::S;
        spec.m = integer();
        expect(')');
        if (spec.m < 2 || spec.m > NetSpec::kMaxParam)
          throw ParseError("S(m) requires 2 <= m <= " + std::to_string(NetSpec::kMaxParam));
        return spec;
      }
      case 'K': {
        expect('(');
        spec.kind = NetSpec::Kind::K;
        spec.m = integer();
        expect(',');
        spec.n = integer();
        expect(')');
        if (spec.m < 1 || spec.n < 1 || spec.m > NetSpec::kMaxParam || spec.n > NetSpec::kMaxParam)
          throw ParseError("K(m,n) requires 1 <= m,n <= " + std::to_string(NetSpec::kMaxParam));
        return spec;
      }
      case 'X': {
        expect('(');
        spec.kind = NetSpec::Kind::Cross;
        spec.left = std::make_unique<NetSpec>(expression());
        expect(',');
        spec.right = std::make_unique<NetSpec>(expression());
        expect(')');
        return spec;
      }
      default:
        throw ParseError(std::string("unknown construction '") + head + "', expected S, K or X");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

NetSpec NetSpec::parse(std::string_view text) { return Parser(text).parse(); }

std::string NetSpec::to_string() const {
  switch (kind) {
    case Kind::S:
      return "S(" + std::to_string(m) + ")";
    case Kind::K:
      return "K(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case Kind::Cross:
      return "X(" + left->to_string() + "," + right->to_string() + ")";
  }
  throw std::logic_error("unknown spec kind");
}

Network realize(const NetSpec& spec) {
  switch (spec.kind) {
    case NetSpec::Kind::S:
      return build_s_network(spec.m);
    case NetSpec::Kind::K:
      return build_complete_bipartite(spec.m, spec.n);
    case NetSpec::Kind::Cross:
      return crisscross(realize(*spec.left), realize(*spec.right));
  }
  throw std::logic_error("unknown spec kind");
}

}  // namespace sumnet
