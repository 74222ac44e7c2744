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

#include "jstyle/checkers.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "java_lexer.h"

namespace jstyle {
namespace {

constexpr std::array<Category, kCategoryCount> kAll = {
    Category::kClassNames,          Category::kMethodNames,
    Category::kVariableNames,       Category::kPackageNames,
    Category::kJavadocFormatting,   Category::kJavadocClass,
    Category::kJavadocConstructor,  Category::kJavadocMethod,
    Category::kJavadocField,        Category::kPrivateInstances,
    Category::kUseless,             Category::kStringConcatenation,
    Category::kMissingOverride,     Category::kEmptyCatchBlock,
    Category::kUnqualifiedStaticAccess, Category::kFinalizeOverride,
    Category::kOrdering,
};

constexpr std::array<std::string_view, kCategoryCount> kNames = {
    "ClassNames",          "MethodNames",
    "VariableNames",       "PackageNames",
    "JavadocFormatting",   "JavadocClass",
    "JavadocConstructor",  "JavadocMethod",
    "JavadocField",        "PrivateInstances",
    "Useless",             "StringConcatenation",
    "MissingOverride",     "EmptyCatchBlock",
    "UnqualifiedStaticAccess", "FinalizeOverride",
    "Ordering",
};

constexpr int kJavadocMinWords = 10;

Violation Make(Category c, const SourceFileModel& model, int line,
               std::string message, std::optional<std::string> detail = {}) {
  return Violation{c, model.path, std::max(line, 1), std::move(message),
                   std::move(detail)};
}

bool IsClassLike(TypeKind k) {
  return k == TypeKind::kClass || k == TypeKind::kEnum ||
         k == TypeKind::kRecord;
}

std::string Quote(std::string_view s) { return "'" + std::string(s) + "'"; }

// Calls f(typeIndex, body) for every body in the file: member bodies, field
// initializers and initializer blocks.
void ForEachBody(const SourceFileModel& model,
                 const std::function<void(std::size_t, const BodyFacts&)>& f) {
  for (std::size_t t = 0; t < model.types.size(); ++t) {
    for (const MemberFact& m : model.types[t].members) {
      if (m.body) f(t, *m.body);
    }
    for (const BodyFacts& b : model.types[t].initializers) f(t, b);
  }
}

const std::string* AlphabeticWord(const IdentifierWords& words, bool last) {
  auto is_alpha = [](const std::string& w) {
    return !w.empty() && std::isalpha(static_cast<unsigned char>(w[0]));
  };
  if (last) {
    for (auto it = words.words.rbegin(); it != words.words.rend(); ++it) {
      if (is_alpha(*it)) return &*it;
    }
  } else {
    for (const std::string& w : words.words) {
      if (is_alpha(w)) return &w;
    }
  }
  return nullptr;
}

bool IsConstantExempt(std::string_view name) {
  return name == "serialVersionUID" || name == "serialPersistentFields";
}

bool IsSerializationHook(const MemberFact& m) {
  static const std::set<std::string_view> kHooks = {
      "writeObject", "readObject", "readObjectNoData", "writeReplace",
      "readResolve"};
  return kHooks.count(m.name) > 0;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

const std::array<Category, kCategoryCount>& AllCategories() { return kAll; }

std::string_view CategoryName(Category c) {
  return kNames[static_cast<std::size_t>(c)];
}

std::optional<Category> CategoryFromName(std::string_view name) {
  for (std::size_t i = 0; i < kCategoryCount; ++i) {
    if (kNames[i] == name) return kAll[i];
  }
  return std::nullopt;
}

CategoryGroup GroupOf(Category c) {
  if (c == Category::kOrdering) return CategoryGroup::kOrdering;
  return static_cast<int>(c) <= static_cast<int>(Category::kJavadocField)
             ? CategoryGroup::kCodeStyle
             : CategoryGroup::kProgrammingPractice;
}

std::string_view GroupName(CategoryGroup g) {
  switch (g) {
    case CategoryGroup::kCodeStyle:
      return "codeStyle";
    case CategoryGroup::kProgrammingPractice:
      return "programmingPractice";
    case CategoryGroup::kOrdering:
      return "ordering";
  }
  return "ordering";
}

bool ViolationLess(const Violation& a, const Violation& b) {
  return std::tie(a.category, a.filePath, a.line, a.message, a.detail) <
         std::tie(b.category, b.filePath, b.line, b.message, b.detail);
}

MemberGroup GroupOfMember(MemberKind kind) {
  switch (kind) {
    case MemberKind::kInnerType:
      return MemberGroup::kInnerTypes;
    case MemberKind::kStaticField:
      return MemberGroup::kStaticFields;
    case MemberKind::kStaticMethod:
      return MemberGroup::kStaticMethods;
    case MemberKind::kInstanceField:
      return MemberGroup::kInstanceFields;
    case MemberKind::kConstructor:
      return MemberGroup::kConstructors;
    case MemberKind::kInstanceMethod:
      return MemberGroup::kInstanceMethods;
  }
  return MemberGroup::kInstanceMethods;
}

std::string_view MemberGroupName(MemberGroup g) {
  switch (g) {
    case MemberGroup::kInnerTypes:
      return "innerTypes";
    case MemberGroup::kStaticFields:
      return "staticFields";
    case MemberGroup::kStaticMethods:
      return "staticMethods";
    case MemberGroup::kInstanceFields:
      return "instanceFields";
    case MemberGroup::kConstructors:
      return "constructors";
    case MemberGroup::kInstanceMethods:
      return "instanceMethods";
  }
  return "instanceMethods";
}

OrderingConfig OrderingConfig::BuiltIn(int id) {
  using G = MemberGroup;
  OrderingConfig cfg;
  cfg.id = id;
  switch (id) {
    case 1:
      cfg.rankedGroups = {G::kInnerTypes,     G::kStaticFields,
                          G::kStaticMethods,  G::kInstanceFields,
                          G::kConstructors,   G::kInstanceMethods};
      break;
    case 2:
      cfg.rankedGroups = {G::kStaticFields,   G::kStaticMethods,
                          G::kInstanceFields, G::kConstructors,
                          G::kInstanceMethods, G::kInnerTypes};
      break;
    case 3:
      cfg.rankedGroups = {G::kStaticFields,   G::kStaticMethods,
                          G::kInstanceFields, G::kInstanceMethods,
                          G::kConstructors,   G::kInnerTypes};
      break;
    case 4:
      cfg.rankedGroups = {G::kInstanceFields, G::kConstructors,
                          G::kInstanceMethods, G::kStaticFields,
                          G::kStaticMethods,  G::kInnerTypes};
      break;
    default:
      throw std::invalid_argument("ordering id must be 1..4");
  }
  return cfg;
}

bool OrderingConfig::IsPermutation() const {
  std::array<bool, 6> seen{};
  for (MemberGroup g : rankedGroups) {
    auto i = static_cast<std::size_t>(g);
    if (i >= seen.size() || seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

std::vector<Violation> CheckClassNames(const SourceFileModel& model,
                                       const Lexicon& lexicon) {
  std::vector<Violation> out;
  for (const TypeFact& t : model.types) {
    if (!IsClassLike(t.kind)) continue;
    IdentifierWords words = SplitIdentifier(t.name, Casing::kUpperCamel);
    if (!words.casingValid) {
      out.push_back(Make(Category::kClassNames, model, t.line,
                         "type name " + Quote(t.name) +
                             " is not UpperCamelCase",
                         t.name));
      continue;
    }
    const std::string* last = AlphabeticWord(words, /*last=*/true);
    if (last == nullptr) continue;
    CategorySet cats = lexicon.LookupWithFallback(*last);
    if (!cats.empty() && !cats.Has(WordCategory::kNoun)) {
      out.push_back(Make(Category::kClassNames, model, t.line,
                         "type name " + Quote(t.name) +
                             " does not end in a noun (" + *last + ": " +
                             cats.ToString() + ")",
                         t.name));
    }
  }
  return out;
}

std::vector<Violation> CheckMethodNames(const SourceFileModel& model,
                                        const Lexicon& lexicon) {
  static const std::set<std::string_view> kAllow = {
      "get", "set", "is", "has", "can", "to", "of", "from", "new", "with"};
  std::vector<Violation> out;
  for (const TypeFact& t : model.types) {
    for (const MemberFact& m : t.members) {
      if (!m.IsMethod()) continue;
      IdentifierWords words = SplitIdentifier(m.name, Casing::kLowerCamel);
      if (!words.casingValid) {
        out.push_back(Make(Category::kMethodNames, model, m.line,
                           "method name " + Quote(m.name) +
                               " is not lowerCamelCase",
                           m.name));
        continue;
      }
      const std::string* first = AlphabeticWord(words, /*last=*/false);
      if (first == nullptr || kAllow.count(*first)) continue;
      CategorySet cats = lexicon.LookupWithFallback(*first);
      if (!cats.empty() && !cats.Has(WordCategory::kVerb)) {
        out.push_back(Make(Category::kMethodNames, model, m.line,
                           "method name " + Quote(m.name) +
                               " does not start with a verb (" + *first +
                               ": " + cats.ToString() + ")",
                           m.name));
      }
    }
  }
  return out;
}

std::vector<Violation> CheckVariableNames(const SourceFileModel& model) {
  std::vector<Violation> out;
  auto check_camel = [&](const std::string& name, int line,
                         std::string_view what) {
    if (!MatchesCasing(name, Casing::kLowerCamel)) {
      out.push_back(Make(Category::kVariableNames, model, line,
                         std::string(what) + " " + Quote(name) +
                             " is not lowerCamelCase",
                         name));
    }
  };
  for (const TypeFact& t : model.types) {
    for (const MemberFact& m : t.members) {
      if (m.IsField()) {
        if (m.isStaticFinal) {
          if (!IsConstantExempt(m.name) &&
              !MatchesCasing(m.name, Casing::kConstant)) {
            out.push_back(Make(Category::kVariableNames, model, m.line,
                               "constant " + Quote(m.name) +
                                   " is not UPPER_SNAKE_CASE",
                               m.name));
          }
        } else {
          check_camel(m.name, m.line, "field");
        }
      }
      for (const Param& p : m.params) check_camel(p.name, m.line, "parameter");
    }
  }
  ForEachBody(model, [&](std::size_t, const BodyFacts& body) {
    for (const LocalVarFact& v : body.localVars) {
      check_camel(v.name, v.line, "variable");
    }
  });
  return out;
}

std::vector<Violation> CheckPackageNames(const SourceFileModel& model) {
  std::vector<Violation> out;
  const std::string pkg = model.PackageName();
  const int line = model.packageDecl ? model.packageDecl->line : 1;

  auto valid_name = [](const std::string& p) {
    // ^[a-z]+(\.[a-z][a-z0-9]*)*$
    std::size_t i = 0;
    bool first = true;
    while (true) {
      std::size_t start = i;
      if (i >= p.size() || p[i] < 'a' || p[i] > 'z') return false;
      while (i < p.size() && p[i] != '.') {
        char c = p[i];
        bool ok = (c >= 'a' && c <= 'z') || (!first && c >= '0' && c <= '9');
        if (!ok) return false;
        ++i;
      }
      if (i == start) return false;
      if (i == p.size()) return true;
      ++i;  // '.'
      first = false;
    }
  };

  std::string dir;
  if (auto slash = model.path.rfind('/'); slash != std::string::npos) {
    dir = model.path.substr(0, slash);
  }
  std::string expected_path = pkg;
  std::replace(expected_path.begin(), expected_path.end(), '.', '/');

  std::string problem;
  if (!pkg.empty() && !valid_name(pkg)) {
    problem = "package " + Quote(pkg) + " is not all lowercase";
  } else if (model.sourceRoot) {
    std::string rel;
    if (dir.size() > model.sourceRoot->size()) {
      rel = dir.substr(model.sourceRoot->size() + 1);
    }
    if (rel != expected_path) {
      problem = pkg.empty() ? "missing package declaration for directory " +
                                  Quote(rel)
                            : "package " + Quote(pkg) +
                                  " does not match directory " + Quote(rel);
    }
  } else if (pkg.empty()) {
    if (!dir.empty()) {
      problem = "missing package declaration for directory " + Quote(dir);
    }
  } else if (dir != expected_path && !dir.ends_with("/" + expected_path)) {
    problem = "package " + Quote(pkg) + " does not match directory " +
              Quote(dir);
  }
  if (!problem.empty()) {
    out.push_back(Make(Category::kPackageNames, model, line, problem, pkg));
  }
  return out;
}

std::vector<Violation> CheckJavadocPresence(const SourceFileModel& model,
                                            JavadocKind kind) {
  std::vector<Violation> out;
  auto check = [&](Category c, const std::optional<JavadocFact>& doc,
                   int line, const std::string& what, const std::string& name,
                   bool min_words) {
    if (!doc) {
      out.push_back(Make(c, model, line, "public " + what + " " +
                                             Quote(name) + " has no Javadoc",
                         name));
    } else if (min_words && !doc->inheritsDoc &&
               doc->wordCount < kJavadocMinWords) {
      out.push_back(Make(c, model, line,
                         "Javadoc of public " + what + " " + Quote(name) +
                             " has " + std::to_string(doc->wordCount) +
                             " words, fewer than " +
                             std::to_string(kJavadocMinWords),
                         name));
    }
  };
  for (const TypeFact& t : model.types) {
    if (kind == JavadocKind::kClass) {
      if (IsClassLike(t.kind) && t.visibility == Visibility::kPublic) {
        check(Category::kJavadocClass, t.javadoc, t.line,
              std::string(ToString(t.kind)), t.name, true);
      }
      continue;
    }
    for (const MemberFact& m : t.members) {
      if (m.visibility != Visibility::kPublic) continue;
      if (kind == JavadocKind::kMethod && m.IsMethod()) {
        check(Category::kJavadocMethod, m.javadoc, m.line, "method", m.name,
              true);
      } else if (kind == JavadocKind::kConstructor &&
                 m.kind == MemberKind::kConstructor) {
        check(Category::kJavadocConstructor, m.javadoc, m.line, "constructor",
              m.name, true);
      } else if (kind == JavadocKind::kField && m.IsField()) {
        check(Category::kJavadocField, m.javadoc, m.line, "field", m.name,
              false);
      }
    }
  }
  return out;
}

std::vector<Violation> CheckJavadocFormatting(const SourceFileModel& model) {
  std::vector<Violation> out;
  for (const TypeFact& t : model.types) {
    for (const MemberFact& m : t.members) {
      if (!m.IsMethod() || !m.javadoc || m.javadoc->inheritsDoc) continue;
      const JavadocFact& doc = *m.javadoc;
      auto emit = [&](std::string msg) {
        out.push_back(Make(Category::kJavadocFormatting, model, doc.line,
                           "Javadoc of " + Quote(m.name) + ": " + msg,
                           m.name));
      };
      std::vector<std::string> param_tags;
      std::vector<std::string> throws_tags;
      int returns = 0;
      bool empty_description = false;
      for (const JavadocTag& tag : doc.tags) {
        if (tag.name == "param") param_tags.push_back(tag.argName.value_or(""));
        if (tag.name == "throws" || tag.name == "exception") {
          std::string arg = tag.argName.value_or("");
          throws_tags.push_back(arg.substr(arg.rfind('.') + 1));
        }
        if (tag.name == "return") ++returns;
        if (tag.descriptionWordCount == 0) empty_description = true;
      }
      auto documented = [&](const std::string& name) {
        return std::find(param_tags.begin(), param_tags.end(), name) !=
               param_tags.end();
      };
      // (1) undocumented parameter
      for (const Param& p : m.params) {
        if (!documented(p.name)) {
          emit("parameter " + Quote(p.name) + " has no @param tag");
          break;
        }
      }
      // (2) @param naming no parameter
      for (const std::string& name : param_tags) {
        bool known = std::any_of(m.params.begin(), m.params.end(),
                                 [&](const Param& p) { return p.name == name; });
        if (!known && name.size() > 2 && name.front() == '<' &&
            name.back() == '>') {
          std::string tv = name.substr(1, name.size() - 2);
          known = std::find(m.typeParams.begin(), m.typeParams.end(), tv) !=
                  m.typeParams.end();
        }
        if (!known) {
          emit("@param " + Quote(name) + " names no parameter");
          break;
        }
      }
      // (3) @return inconsistent with the declared return type
      const bool is_void = m.returnTypeName.value_or("void") == "void";
      if (!is_void && returns == 0) {
        emit("non-void method has no @return tag");
      } else if (is_void && returns > 0) {
        emit("void method has an @return tag");
      }
      // (4) duplicated tag
      {
        std::set<std::string> seen_params;
        std::set<std::string> seen_throws;
        bool dup = returns > 1;
        for (const std::string& p : param_tags) {
          dup = dup || !seen_params.insert(p).second;
        }
        for (const std::string& e : throws_tags) {
          dup = dup || !seen_throws.insert(e).second;
        }
        if (dup) emit("duplicated block tag");
      }
      // (5) undocumented thrown type
      for (const std::string& thrown : m.thrownTypes) {
        if (std::find(throws_tags.begin(), throws_tags.end(), thrown) ==
            throws_tags.end()) {
          emit("thrown type " + Quote(thrown) + " has no @throws tag");
          break;
        }
      }
      // (6) tag without description
      if (empty_description) emit("block tag without description");
    }
  }
  return out;
}

std::vector<Violation> CheckMissingOverride(const SourceFileModel& model,
                                            std::size_t file_index,
                                            const ProjectIndex& index) {
  std::vector<Violation> out;
  for (std::size_t t = 0; t < model.types.size(); ++t) {
    for (const MemberFact& m : model.types[t].members) {
      if (m.kind != MemberKind::kInstanceMethod || m.HasAnnotation("Override")) {
        continue;
      }
      OverrideResolution r = ResolveOverride(index, file_index, t, m);
      if (r.overrides && r.parentResolved && !r.parentDeprecated) {
        out.push_back(Make(Category::kMissingOverride, model, m.line,
                           "method " + Quote(m.name) +
                               " overrides a supertype method without "
                               "@Override",
                           m.name));
      }
    }
  }
  return out;
}

std::vector<Violation> CheckEmptyCatch(const SourceFileModel& model) {
  std::vector<Violation> out;
  ForEachBody(model, [&](std::size_t, const BodyFacts& body) {
    for (const CatchFact& c : body.catches) {
      if (!c.isBodyEmpty || c.hasComment) continue;
      if (c.enclosingMethodIsTest && c.exceptionVarName.starts_with("expected")) {
        continue;
      }
      out.push_back(Make(Category::kEmptyCatchBlock, model, c.line,
                         "empty catch block without explanatory comment",
                         c.exceptionVarName));
    }
  });
  return out;
}

std::vector<Violation> CheckUnqualifiedStatic(const SourceFileModel& model,
                                              std::size_t file_index,
                                              const ProjectIndex& index) {
  std::vector<Violation> out;
  ForEachBody(model, [&](std::size_t t, const BodyFacts& body) {
    for (const AccessFact& a : body.memberAccesses) {
      StaticAccessResolution r = ResolveStaticAccess(index, file_index, t, a);
      if (r.resolved && r.isStaticMember && !r.qualifiedCorrectly) {
        out.push_back(Make(Category::kUnqualifiedStaticAccess, model, a.line,
                           "static member " + Quote(a.memberName) +
                               " accessed through " +
                               std::string(a.receiverForm ==
                                                   ReceiverForm::kMethodReturn
                                               ? "a method return value"
                                               : "an instance"),
                           a.memberName));
      }
    }
  });
  return out;
}

std::vector<Violation> CheckFinalizeOverride(const SourceFileModel& model) {
  std::vector<Violation> out;
  for (const TypeFact& t : model.types) {
    for (const MemberFact& m : t.members) {
      if (m.IsMethod() && m.name == "finalize" && m.params.empty() &&
          m.returnTypeName == "void") {
        out.push_back(Make(Category::kFinalizeOverride, model, m.line,
                           "finalize() must not be overridden", m.name));
      }
    }
  }
  return out;
}

std::vector<Violation> CheckPrivateInstances(const SourceFileModel& model) {
  std::vector<Violation> out;
  for (const TypeFact& t : model.types) {
    for (const MemberFact& m : t.members) {
      if (m.kind != MemberKind::kInstanceField) continue;
      if (m.visibility == Visibility::kPublic ||
          m.visibility == Visibility::kPackage) {
        out.push_back(Make(Category::kPrivateInstances, model, m.line,
                           std::string(ToString(m.visibility)) +
                               " instance field " + Quote(m.name),
                           m.name));
      }
    }
  }
  return out;
}

std::vector<Violation> CheckStringConcatenation(const SourceFileModel& model) {
  std::vector<Violation> out;
  auto field_type = [&](std::size_t t, const std::string& name)
      -> std::optional<std::string> {
    for (std::optional<std::size_t> cur = t; cur;
         cur = model.types[*cur].outer) {
      for (const MemberFact& m : model.types[*cur].members) {
        if (m.IsField() && m.name == name) return m.fieldTypeName;
      }
    }
    return std::nullopt;
  };
  ForEachBody(model, [&](std::size_t t, const BodyFacts& body) {
    for (const StringConcatSite& s : body.stringConcatSites) {
      std::optional<std::string> type = s.targetTypeName;
      if (!type) type = field_type(t, s.targetVarName);
      if (type != "String") continue;
      out.push_back(Make(Category::kStringConcatenation, model, s.line,
                         "string " + Quote(s.targetVarName) +
                             " concatenated inside a loop",
                         s.targetVarName));
    }
  });
  return out;
}

std::vector<std::string> CommentLines(const CommentFact& comment) {
  std::vector<std::string> lines;
  std::string_view text = comment.text;
  const bool line_comment = text.starts_with("//");
  while (true) {
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    line = Trim(line);
    if (line_comment) {
      while (line.starts_with("/")) line.remove_prefix(1);
    } else {
      if (line.starts_with("/*")) {
        line.remove_prefix(2);
        while (line.starts_with("*")) line.remove_prefix(1);
      } else if (line.starts_with("*") && !line.starts_with("*/")) {
        line.remove_prefix(1);
      }
      if (line.ends_with("*/")) line.remove_suffix(2);
    }
    lines.emplace_back(Trim(line));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

bool LooksLikeCommentedOutCode(std::string_view line) {
  line = Trim(line);
  if (line.empty()) return false;

  // Drop string and char literals so their prose does not count.
  std::string code;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (c == '"' || c == '\'') {
      std::size_t j = i + 1;
      while (j < line.size() && line[j] != c) j += line[j] == '\\' ? 2 : 1;
      code += c;
      code += c;
      i = std::min(j, line.size());
      continue;
    }
    code += c;
  }

  // Three or more consecutive plain non-keyword words read as prose.
  {
    int run = 0;
    std::size_t i = 0;
    while (i < code.size()) {
      while (i < code.size() && code[i] == ' ') ++i;
      std::size_t j = i;
      while (j < code.size() && code[j] != ' ') ++j;
      std::string_view word(code.data() + i, j - i);
      bool plain = !word.empty() &&
                   std::all_of(word.begin(), word.end(), [](char c) {
                     return std::isalpha(static_cast<unsigned char>(c));
                   });
      if (plain && !internal::IsJavaKeyword(word)) {
        if (++run >= 3) return false;
      } else {
        run = 0;
      }
      i = j;
    }
  }

  const char last = code.back();
  if (last == ';') return true;
  if (last == '{' || last == '}') {
    // "{@code x}" and similar inline tags end prose, not code.
    if (last == '}') {
      std::size_t open = code.rfind('{');
      if (open != std::string::npos && code.compare(open, 2, "{@") == 0) {
        return false;
      }
    }
    return true;
  }

  static const char* const kControl[] = {"if",    "for",          "while",
                                         "switch", "catch",       "synchronized"};
  for (const char* kw : kControl) {
    std::string_view k(kw);
    if (code.starts_with(k)) {
      std::string_view rest = Trim(std::string_view(code).substr(k.size()));
      if (code.size() > k.size() &&
          (code[k.size()] == ' ' || code[k.size()] == '(') &&
          rest.starts_with("(")) {
        return true;
      }
    }
  }

  // Declaration keyword, an identifier, then '=', '(' or ';'.
  static const std::set<std::string_view> kDecl = {
      "int",    "long",   "short",   "byte",     "char",   "boolean",
      "float",  "double", "void",    "var",      "final",  "static",
      "public", "private", "protected", "return", "new",   "throw"};
  std::size_t sp = code.find(' ');
  if (sp == std::string::npos) return false;
  if (!kDecl.count(std::string_view(code).substr(0, sp))) return false;
  std::size_t i = sp;
  while (i < code.size() && code[i] == ' ') ++i;
  std::size_t id_start = i;
  while (i < code.size() &&
         (std::isalnum(static_cast<unsigned char>(code[i])) || code[i] == '_' ||
          code[i] == '$' || code[i] == '<' || code[i] == '>' ||
          code[i] == '[' || code[i] == ']' || code[i] == '.')) {
    ++i;
  }
  if (i == id_start) return false;
  while (i < code.size() && code[i] == ' ') ++i;
  // A second identifier (the declared name) may follow the type.
  std::size_t name_start = i;
  while (i < code.size() &&
         (std::isalnum(static_cast<unsigned char>(code[i])) || code[i] == '_')) {
    ++i;
  }
  if (i > name_start) {
    while (i < code.size() && code[i] == ' ') ++i;
  }
  return i < code.size() && (code[i] == '=' || code[i] == '(' ||
                             code[i] == ';');
}

std::vector<Violation> CheckUseless(const SourceFileModel& model) {
  std::vector<Violation> raw;
  auto add = [&](int line, std::string msg, std::string detail) {
    raw.push_back(Make(Category::kUseless, model, line, std::move(msg),
                       std::move(detail)));
  };
  for (const ImportFact& imp : model.imports) {
    if (!imp.usedFlag) {
      add(imp.line, "unused import " + Quote(imp.importedName),
          imp.importedName);
    }
  }
  for (const TypeFact& t : model.types) {
    for (const MemberFact& m : t.members) {
      if (m.visibility != Visibility::kPrivate || m.usedFlag ||
          !m.annotations.empty()) {
        continue;
      }
      if (m.IsMethod() && !IsSerializationHook(m)) {
        add(m.line, "unused private method " + Quote(m.name), m.name);
      } else if (m.IsField() && !IsConstantExempt(m.name)) {
        add(m.line, "unused private field " + Quote(m.name), m.name);
      }
    }
  }
  ForEachBody(model, [&](std::size_t, const BodyFacts& body) {
    for (const LocalVarFact& v : body.localVars) {
      if (v.kind == LocalVarKind::kLocal && !v.usedFlag) {
        add(v.line, "unused local variable " + Quote(v.name), v.name);
      }
    }
  });
  for (const CommentFact& c : model.comments) {
    if (c.isJavadoc || !c.ownLine) continue;
    std::vector<std::string> lines = CommentLines(c);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (LooksLikeCommentedOutCode(lines[i])) {
        add(c.startLine + static_cast<int>(i), "commented-out code",
            lines[i]);
      }
    }
  }
  // One violation per line.
  std::sort(raw.begin(), raw.end(), ViolationLess);
  std::vector<Violation> out;
  for (Violation& v : raw) {
    if (!out.empty() && out.back().line == v.line) continue;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Violation> CheckOrdering(const SourceFileModel& model,
                                     const OrderingConfig& cfg) {
  std::array<int, 6> rank{};
  for (int i = 0; i < 6; ++i) {
    rank[static_cast<std::size_t>(cfg.rankedGroups[static_cast<std::size_t>(i)])] =
        i;
  }
  std::vector<Violation> out;
  for (const TypeFact& t : model.types) {
    int max_rank = -1;
    MemberGroup max_group = MemberGroup::kInnerTypes;
    for (const MemberFact& m : t.members) {
      MemberGroup g = GroupOfMember(m.kind);
      int r = rank[static_cast<std::size_t>(g)];
      if (r < max_rank) {
        out.push_back(Make(Category::kOrdering, model, m.line,
                           std::string(MemberGroupName(g)) + " member " +
                               Quote(m.name) + " appears after " +
                               std::string(MemberGroupName(max_group)) +
                               " (ordering " + std::to_string(cfg.id) + ")",
                           m.name));
      } else if (r > max_rank) {
        max_rank = r;
        max_group = g;
      }
    }
  }
  return out;
}

std::vector<Violation> RunAll(const std::vector<SourceFileModel>& models,
                              const ProjectIndex& index,
                              const Lexicon& lexicon,
                              const std::optional<OrderingConfig>& ordering) {
  std::vector<Violation> all;
  auto append = [&](std::vector<Violation> v) {
    all.insert(all.end(), std::make_move_iterator(v.begin()),
               std::make_move_iterator(v.end()));
  };
  for (std::size_t f = 0; f < models.size(); ++f) {
    const SourceFileModel& m = models[f];
    append(CheckClassNames(m, lexicon));
    append(CheckMethodNames(m, lexicon));
    append(CheckVariableNames(m));
    append(CheckPackageNames(m));
    append(CheckJavadocFormatting(m));
    append(CheckJavadocPresence(m, JavadocKind::kClass));
    append(CheckJavadocPresence(m, JavadocKind::kConstructor));
    append(CheckJavadocPresence(m, JavadocKind::kMethod));
    append(CheckJavadocPresence(m, JavadocKind::kField));
    append(CheckPrivateInstances(m));
    append(CheckUseless(m));
    append(CheckStringConcatenation(m));
    append(CheckMissingOverride(m, f, index));
    append(CheckEmptyCatch(m));
    append(CheckUnqualifiedStatic(m, f, index));
    append(CheckFinalizeOverride(m));
    if (ordering) append(CheckOrdering(m, *ordering));
  }
  std::stable_sort(all.begin(), all.end(), ViolationLess);
  return all;
}

}  // namespace jstyle
