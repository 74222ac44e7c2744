// Copyright 2026 The jstyle Authors.
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

#include "json_writer.h"

#include <cstdio>

#include "text_util.h"

namespace jstyle::internal {

void Json::Quote(std::string* out, std::string_view s) {
  out->push_back('"');
  for (char ch : s) {
    unsigned char c = static_cast<unsigned char>(ch);
    switch (c) {
      case '"':
        out->append("\\\"");
        break;
      case '\\':
        out->append("\\\\");
        break;
      case '\n':
        out->append("\\n");
        break;
      case '\r':
        out->append("\\r");
        break;
      case '\t':
        out->append("\\t");
        break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out->append(buf);
        } else {
          out->push_back(ch);
        }
    }
  }
  out->push_back('"');
}

void Json::Write(std::string* out, int depth) const {
  switch (kind_) {
    case Kind::kNull:
      out->append("null");
      return;
    case Kind::kBool:
      out->append(bool_ ? "true" : "false");
      return;
    case Kind::kInt:
      out->append(std::to_string(int_));
      return;
    case Kind::kDouble:
      out->append(FormatFixed(double_, 4));
      return;
    case Kind::kString:
      Quote(out, string_);
      return;
    case Kind::kArray:
      if (items_.empty()) {
        out->append("[]");
        return;
      }
      out->append("[\n");
      for (std::size_t i = 0; i < items_.size(); ++i) {
        Indent(out, depth + 1);
        items_[i].Write(out, depth + 1);
        out->append(i + 1 < items_.size() ? ",\n" : "\n");
      }
      Indent(out, depth);
      out->push_back(']');
      return;
    case Kind::kObject:
      if (members_.empty()) {
        out->append("{}");
        return;
      }
      out->append("{\n");
      for (std::size_t i = 0; i < members_.size(); ++i) {
        Indent(out, depth + 1);
        Quote(out, members_[i].first);
        out->append(": ");
        members_[i].second.Write(out, depth + 1);
        out->append(i + 1 < members_.size() ? ",\n" : "\n");
      }
      Indent(out, depth);
      out->push_back('}');
      return;
  }
}

}  // namespace jstyle::internal
