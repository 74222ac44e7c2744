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

#include <algorithm>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "jstyle/source_model.h"

namespace jstyle {

namespace fs = std::filesystem;

std::string_view ToString(Visibility v) {
  switch (v) {
    case Visibility::kPublic:
      return "public";
    case Visibility::kProtected:
      return "protected";
    case Visibility::kPackage:
      return "package";
    case Visibility::kPrivate:
      return "private";
  }
  return "package";
}

std::string_view ToString(TypeKind k) {
  switch (k) {
    case TypeKind::kClass:
      return "class";
    case TypeKind::kEnum:
      return "enum";
    case TypeKind::kInterface:
      return "interface";
    case TypeKind::kRecord:
      return "record";
  }
  return "class";
}

std::string_view ToString(MemberKind k) {
  switch (k) {
    case MemberKind::kInstanceField:
      return "instanceField";
    case MemberKind::kStaticField:
      return "staticField";
    case MemberKind::kConstructor:
      return "constructor";
    case MemberKind::kInstanceMethod:
      return "instanceMethod";
    case MemberKind::kStaticMethod:
      return "staticMethod";
    case MemberKind::kInnerType:
      return "innerType";
  }
  return "instanceMethod";
}

std::string_view ToString(ReceiverForm f) {
  switch (f) {
    case ReceiverForm::kClassName:
      return "className";
    case ReceiverForm::kInstanceExpr:
      return "instanceExpr";
    case ReceiverForm::kMethodReturn:
      return "methodReturn";
    case ReceiverForm::kImplicit:
      return "implicit";
  }
  return "implicit";
}

ParseError::ParseError(std::string path, int line, int column,
                       const std::string& what)
    : std::runtime_error(path + ":" + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + what),
      path_(std::move(path)),
      line_(line),
      column_(column) {}

bool MemberFact::HasAnnotation(std::string_view simple_name) const {
  return std::find(annotations.begin(), annotations.end(), simple_name) !=
         annotations.end();
}

bool IsValidUtf8(std::string_view bytes) {
  std::size_t i = 0;
  const std::size_t n = bytes.size();
  while (i < n) {
    auto c = static_cast<unsigned char>(bytes[i]);
    if (c < 0x80) {
      ++i;
      continue;
    }
    int extra;
    unsigned min;
    unsigned cp;
    if ((c & 0xE0) == 0xC0) {
      extra = 1, min = 0x80, cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2, min = 0x800, cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      extra = 3, min = 0x10000, cp = c & 0x07;
    } else {
      return false;
    }
    if (i + extra >= n) return false;
    for (int k = 1; k <= extra; ++k) {
      auto d = static_cast<unsigned char>(bytes[i + k]);
      if ((d & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (d & 0x3F);
    }
    if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      return false;
    }
    i += extra + 1;
  }
  return true;
}

namespace {

std::string Relative(const fs::path& p, const fs::path& root) {
  return p.lexically_relative(root).generic_string();
}

bool IsUnderTestDir(const std::string& rel) {
  return rel.starts_with("src/test/") || rel.find("/src/test/") !=
                                             std::string::npos;
}

// Walks `dir` without following directory symlinks. `visit` receives every
// regular file; `enter` decides whether to descend into a directory.
template <class Enter, class Visit>
void Walk(const fs::path& dir, Enter enter, Visit visit) {
  std::error_code ec;
  fs::directory_iterator it(dir, fs::directory_options::skip_permission_denied,
                            ec);
  if (ec) return;
  for (const fs::directory_entry& e : it) {
    std::error_code sec;
    if (e.is_symlink(sec)) {
      if (e.is_regular_file(sec)) visit(e.path());
      continue;
    }
    if (e.is_directory(sec)) {
      if (enter(e.path())) Walk(e.path(), enter, visit);
    } else if (e.is_regular_file(sec)) {
      visit(e.path());
    }
  }
}

}  // namespace

std::vector<DiscoveredFile> DiscoverSources(const fs::path& root,
                                            const DiscoveryOptions& options) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw IoError("not a readable directory: " + root.string());
  }
  fs::directory_iterator probe(root, ec);
  if (ec) throw IoError("cannot read directory: " + root.string());

  auto excluded = [&](const fs::path& p) {
    std::string name = p.filename().string();
    return std::find(options.excludedDirNames.begin(),
                     options.excludedDirNames.end(),
                     name) != options.excludedDirNames.end();
  };

  std::vector<std::string> source_roots;
  Walk(
      root,
      [&](const fs::path& d) {
        if (excluded(d)) return false;
        std::string rel = Relative(d, root);
        if (rel == "src/main/java" || rel.ends_with("/src/main/java")) {
          source_roots.push_back(rel);
          return false;  // a nested src/main/java belongs to this root
        }
        return true;
      },
      [](const fs::path&) {});

  std::set<std::string> seen;
  std::vector<DiscoveredFile> out;
  auto add = [&](const fs::path& file, std::optional<std::string> src_root) {
    if (file.extension() != ".java") return;
    std::string rel = Relative(file, root);
    if (seen.insert(rel).second) out.push_back({rel, std::move(src_root)});
  };

  if (!source_roots.empty()) {
    for (const std::string& sr : source_roots) {
      Walk(
          root / sr, [&](const fs::path& d) { return !excluded(d); },
          [&](const fs::path& f) { add(f, sr); });
    }
  } else {
    Walk(
        root,
        [&](const fs::path& d) {
          return !excluded(d) && !IsUnderTestDir(Relative(d, root) + "/");
        },
        [&](const fs::path& f) { add(f, std::nullopt); });
  }
  std::sort(out.begin(), out.end(),
            [](const DiscoveredFile& a, const DiscoveredFile& b) {
              return a.relativePath < b.relativePath;
            });
  return out;
}

}  // namespace jstyle
