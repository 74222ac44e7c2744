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

// Per-file syntactic facts extracted from Java sources. Every checker works
// from these facts only; nothing downstream looks at raw text again.

#ifndef JSTYLE_SOURCE_MODEL_H_
#define JSTYLE_SOURCE_MODEL_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jstyle {

enum class Visibility { kPublic, kProtected, kPackage, kPrivate };
enum class TypeKind { kClass, kEnum, kInterface, kRecord };
enum class MemberKind {
  kInstanceField,
  kStaticField,
  kConstructor,
  kInstanceMethod,
  kStaticMethod,
  kInnerType,
};
enum class ReceiverForm { kClassName, kInstanceExpr, kMethodReturn, kImplicit };

std::string_view ToString(Visibility v);
std::string_view ToString(TypeKind k);
std::string_view ToString(MemberKind k);
std::string_view ToString(ReceiverForm f);

struct JavadocTag {
  std::string name;                    // without the leading '@'
  std::optional<std::string> argName;  // @param / @throws / @exception
  int descriptionWordCount = 0;

  bool operator==(const JavadocTag&) const = default;
};

struct JavadocFact {
  int line = 0;
  int wordCount = 0;
  std::vector<JavadocTag> tags;
  bool inheritsDoc = false;  // contains {@inheritDoc}

  bool operator==(const JavadocFact&) const = default;
};

struct CommentFact {
  int startLine = 0;
  int endLine = 0;
  std::string text;
  bool isJavadoc = false;
  // No code tokens share the first or last line with the comment.
  bool ownLine = false;

  bool operator==(const CommentFact&) const = default;
};

struct ImportFact {
  int line = 0;
  std::string importedName;
  bool isStatic = false;
  bool isWildcard = false;
  bool usedFlag = false;

  bool operator==(const ImportFact&) const = default;
};

struct CatchFact {
  int line = 0;
  std::string exceptionVarName;
  bool isBodyEmpty = false;
  bool hasComment = false;
  bool enclosingMethodIsTest = false;

  bool operator==(const CatchFact&) const = default;
};

enum class LoopKind { kFor, kForEach, kWhile, kDoWhile };

struct LoopFact {
  int line = 0;
  int endLine = 0;
  LoopKind kind = LoopKind::kFor;

  bool operator==(const LoopFact&) const = default;
};

struct StringConcatSite {
  int line = 0;
  std::string targetVarName;
  // Declared type when the target is a local or parameter in scope.
  std::optional<std::string> targetTypeName;

  bool operator==(const StringConcatSite&) const = default;
};

struct AccessFact {
  int line = 0;
  std::string memberName;
  ReceiverForm receiverForm = ReceiverForm::kImplicit;
  std::optional<std::string> receiverTypeName;
  // Receiver spelling for simple names, dotted names, `this.x` and
  // unqualified calls; used to resolve the receiver after the whole file is
  // known.
  std::optional<std::string> receiverText;

  bool operator==(const AccessFact&) const = default;
};

enum class LocalVarKind { kLocal, kForEach, kResource, kCatchParam, kPattern };

struct LocalVarFact {
  std::string name;
  std::string typeName;
  int line = 0;
  bool usedFlag = false;
  LocalVarKind kind = LocalVarKind::kLocal;

  bool operator==(const LocalVarFact&) const = default;
};

struct BodyFacts {
  std::vector<CatchFact> catches;
  std::vector<LoopFact> loops;
  std::vector<StringConcatSite> stringConcatSites;
  std::vector<AccessFact> memberAccesses;
  std::vector<LocalVarFact> localVars;

  bool operator==(const BodyFacts&) const = default;
};

struct Param {
  std::string name;
  std::string typeName;  // erased simple name, "[]" per dimension

  bool operator==(const Param&) const = default;
};

struct MemberFact {
  MemberKind kind = MemberKind::kInstanceMethod;
  std::string name;
  Visibility visibility = Visibility::kPackage;
  int line = 0;
  bool isFinal = false;
  bool isStaticFinal = false;
  bool isAbstract = false;
  std::optional<JavadocFact> javadoc;
  std::vector<std::string> annotations;  // simple names, no '@'
  std::vector<Param> params;
  std::optional<std::string> returnTypeName;
  std::vector<std::string> thrownTypes;
  std::vector<std::string> typeParams;
  // Field type for fields.
  std::string fieldTypeName;
  // Private fields and methods: the name occurs outside its declaration
  // somewhere in the file. Always true for non-private members.
  bool usedFlag = true;
  std::optional<BodyFacts> body;
  // Index into SourceFileModel::types for kInnerType members.
  std::optional<std::size_t> innerTypeIndex;

  bool HasAnnotation(std::string_view simple_name) const;
  bool IsMethod() const {
    return kind == MemberKind::kInstanceMethod ||
           kind == MemberKind::kStaticMethod;
  }
  bool IsField() const {
    return kind == MemberKind::kInstanceField ||
           kind == MemberKind::kStaticField;
  }

  bool operator==(const MemberFact&) const = default;
};

struct TypeFact {
  std::string name;
  TypeKind kind = TypeKind::kClass;
  Visibility visibility = Visibility::kPackage;
  int line = 0;
  std::optional<JavadocFact> javadoc;
  std::vector<MemberFact> members;
  bool isNested = false;
  bool isLocal = false;  // declared inside a method body
  std::optional<std::size_t> outer;
  std::vector<std::string> annotations;
  std::vector<std::string> typeParams;
  // Supertype names as written, generics erased, possibly dotted.
  std::optional<std::string> superclass;
  std::vector<std::string> interfaces;
  // Static and instance initializer blocks.
  std::vector<BodyFacts> initializers;

  bool operator==(const TypeFact&) const = default;
};

struct PackageDecl {
  std::string name;
  int line = 0;

  bool operator==(const PackageDecl&) const = default;
};

struct SourceFileModel {
  std::string path;  // repo-relative, '/' separated
  // Repo-relative source root (e.g. "core/src/main/java") when discovered
  // under a standard layout; unset for fallback discovery.
  std::optional<std::string> sourceRoot;
  std::optional<PackageDecl> packageDecl;
  std::vector<ImportFact> imports;
  std::vector<TypeFact> types;  // pre-order, source order
  std::vector<CommentFact> comments;
  int lineCount = 0;   // non-blank lines
  int totalLines = 0;  // physical lines

  std::string PackageName() const {
    return packageDecl ? packageDecl->name : std::string();
  }

  bool operator==(const SourceFileModel&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, int line, int column, const std::string& what);
  const std::string& path() const { return path_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string path_;
  int line_;
  int column_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Files under any src/main/java directory, or every .java file outside
// excluded directories when no such directory exists. Sorted, repo-relative.
struct DiscoveredFile {
  std::string relativePath;
  std::optional<std::string> sourceRoot;

  bool operator==(const DiscoveredFile&) const = default;
};

struct DiscoveryOptions {
  std::vector<std::string> excludedDirNames = {"target", "build", ".git"};
};

std::vector<DiscoveredFile> DiscoverSources(
    const std::filesystem::path& root, const DiscoveryOptions& options = {});

// Throws ParseError on syntax errors.
SourceFileModel ParseCompilationUnit(std::string_view source_text,
                                     std::string_view path);

JavadocFact ExtractJavadoc(std::string_view raw_comment, int line = 1);

// True when `bytes` is well-formed UTF-8.
bool IsValidUtf8(std::string_view bytes);

}  // namespace jstyle

#endif  // JSTYLE_SOURCE_MODEL_H_
