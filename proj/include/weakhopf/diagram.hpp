#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weakhopf/exactla.hpp"

namespace weakhopf {

// A tensor word of object identifiers; the empty word is the unit object.
using ObjWord = std::vector<std::string>;

std::string format_word(const ObjWord& w);

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class TypeMismatch : public Error {
 public:
  TypeMismatch(ObjWord expected, ObjWord found);
  const ObjWord& expected() const { return expected_; }
  const ObjWord& found() const { return found_; }

 private:
  ObjWord expected_, found_;
};

class UnboundGenerator : public Error {
 public:
  explicit UnboundGenerator(const std::string& name);
};

class UnboundObject : public Error {
 public:
  explicit UnboundObject(const std::string& name);
};

class BoundaryMismatch : public Error {
 public:
  using Error::Error;
};

struct MorTerm;
using TermPtr = std::shared_ptr<const MorTerm>;

struct MorTerm {
  enum class Kind { Gen, Id, Compose, Tensor, Braid, BraidInv };
  Kind kind;
  std::string name;         // Gen
  ObjWord word;             // Id; first braided word for Braid/BraidInv
  ObjWord other;            // second braided word for Braid/BraidInv
  TermPtr first, second;    // Compose: first applied, then second. Tensor: left, right.
};

TermPtr gen(std::string name);
TermPtr id(ObjWord w);
// `f ; g`: f first, then g.
TermPtr seq(TermPtr f, TermPtr g);
TermPtr tensor(TermPtr f, TermPtr g);
TermPtr braid_term(ObjWord a, ObjWord b);
TermPtr braid_inv_term(ObjWord a, ObjWord b);

bool same_term(const MorTerm& a, const MorTerm& b);

TermPtr parse_term(std::string_view src);
std::string print_term(const MorTerm& t);

struct Generator {
  ObjWord dom;
  ObjWord cod;
  Mat mat;
};

class GenEnv {
 public:
  void bind_object(const std::string& name, std::size_t dim);
  // Throws ShapeError when the matrix does not match the word dimensions.
  void bind(const std::string& name, ObjWord dom, ObjWord cod, Mat m);

  std::size_t dim(const std::string& object) const;
  std::size_t dim(const ObjWord& w) const;
  const Generator& generator(const std::string& name) const;
  bool has_generator(const std::string& name) const { return gens_.count(name) > 0; }
  const std::map<std::string, std::size_t>& objects() const { return objects_; }
  const std::map<std::string, Generator>& generators() const { return gens_; }

 private:
  std::map<std::string, std::size_t> objects_;
  std::map<std::string, Generator> gens_;
};

struct Boundary {
  ObjWord dom;
  ObjWord cod;
  friend bool operator==(const Boundary&, const Boundary&) = default;
};

Boundary typecheck(const MorTerm& t, const GenEnv& env);
Mat evaluate(const MorTerm& t, const GenEnv& env);

struct EquationVerdict {
  bool holds;
  Boundary boundary;
  std::optional<EntryDiff> difference;
};

EquationVerdict equation_holds(const MorTerm& lhs, const MorTerm& rhs, const GenEnv& env);
EquationVerdict equation_holds(std::string_view lhs, std::string_view rhs, const GenEnv& env);

}  // namespace weakhopf
