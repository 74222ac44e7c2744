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

// Violation checkers. Every check is a pure function of the parsed models.

#ifndef JSTYLE_CHECKERS_H_
#define JSTYLE_CHECKERS_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jstyle/lexicon.h"
#include "jstyle/project_index.h"
#include "jstyle/source_model.h"

namespace jstyle {

enum class Category {
  kClassNames,
  kMethodNames,
  kVariableNames,
  kPackageNames,
  kJavadocFormatting,
  kJavadocClass,
  kJavadocConstructor,
  kJavadocMethod,
  kJavadocField,
  kPrivateInstances,
  kUseless,
  kStringConcatenation,
  kMissingOverride,
  kEmptyCatchBlock,
  kUnqualifiedStaticAccess,
  kFinalizeOverride,
  kOrdering,
};

inline constexpr std::size_t kCategoryCount = 17;
// Categories that take part in the total score and in the verdict groups.
inline constexpr std::size_t kScoredCategoryCount = 16;

enum class CategoryGroup { kCodeStyle, kProgrammingPractice, kOrdering };

const std::array<Category, kCategoryCount>& AllCategories();
std::string_view CategoryName(Category c);
std::optional<Category> CategoryFromName(std::string_view name);
CategoryGroup GroupOf(Category c);
std::string_view GroupName(CategoryGroup g);

struct Violation {
  Category category = Category::kClassNames;
  std::string filePath;
  int line = 1;
  std::string message;
  std::optional<std::string> detail;  // offending identifier or text

  bool operator==(const Violation&) const = default;
};

// Orders by category, file, line, then message.
bool ViolationLess(const Violation& a, const Violation& b);

enum class MemberGroup {
  kInnerTypes,
  kStaticFields,
  kStaticMethods,
  kInstanceFields,
  kConstructors,
  kInstanceMethods,
};

MemberGroup GroupOfMember(MemberKind kind);
std::string_view MemberGroupName(MemberGroup g);

struct OrderingConfig {
  int id = 0;  // 1..4 for the built-in conventions
  std::array<MemberGroup, 6> rankedGroups{};

  static OrderingConfig BuiltIn(int id);  // id must be in 1..4
  bool IsPermutation() const;
};

enum class JavadocKind { kClass, kMethod, kConstructor, kField };

std::vector<Violation> CheckClassNames(const SourceFileModel& model,
                                       const Lexicon& lexicon);
std::vector<Violation> CheckMethodNames(const SourceFileModel& model,
                                        const Lexicon& lexicon);
std::vector<Violation> CheckVariableNames(const SourceFileModel& model);
std::vector<Violation> CheckPackageNames(const SourceFileModel& model);
std::vector<Violation> CheckJavadocPresence(const SourceFileModel& model,
                                            JavadocKind kind);
std::vector<Violation> CheckJavadocFormatting(const SourceFileModel& model);
std::vector<Violation> CheckMissingOverride(const SourceFileModel& model,
                                            std::size_t file_index,
                                            const ProjectIndex& index);
std::vector<Violation> CheckEmptyCatch(const SourceFileModel& model);
std::vector<Violation> CheckUnqualifiedStatic(const SourceFileModel& model,
                                              std::size_t file_index,
                                              const ProjectIndex& index);
std::vector<Violation> CheckFinalizeOverride(const SourceFileModel& model);
std::vector<Violation> CheckPrivateInstances(const SourceFileModel& model);
std::vector<Violation> CheckStringConcatenation(const SourceFileModel& model);
std::vector<Violation> CheckUseless(const SourceFileModel& model);
std::vector<Violation> CheckOrdering(const SourceFileModel& model,
                                     const OrderingConfig& cfg);

// True when one line of comment text (markers already stripped) reads as
// Java code rather than prose.
bool LooksLikeCommentedOutCode(std::string_view line);

// Strips comment markers from each line of a comment; element i is line
// `startLine + i`.
std::vector<std::string> CommentLines(const CommentFact& comment);

// All checks over all models, sorted with ViolationLess. The ordering check
// runs only when `ordering` is set.
std::vector<Violation> RunAll(const std::vector<SourceFileModel>& models,
                              const ProjectIndex& index,
                              const Lexicon& lexicon,
                              const std::optional<OrderingConfig>& ordering);

}  // namespace jstyle

#endif  // JSTYLE_CHECKERS_H_
