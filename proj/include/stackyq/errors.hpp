#pragma once

#include <stdexcept>
#include <string>

namespace stackyq {

/** Malformed input document (unparsable JSON or a structurally invalid field). */
class parse_error : public std::runtime_error {
  public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/** Input data that parses but violates a stacky-polytope axiom.
 *  Carries the violated axiom and, where meaningful, the offending facet. */
class stacky_error : public std::runtime_error {
  public:
    stacky_error(std::string axiom, long facet, const std::string& what)
        : std::runtime_error(what), axiom_(std::move(axiom)), facet_(facet) {}

    const std::string& axiom() const { return axiom_; }
    /** Facet index (0-based), or -1 when the violation is not tied to one facet. */
    long facet() const { return facet_; }

  private:
    std::string axiom_;
    long facet_;
};

/** Broken internal assertion (enumeration or precision failure). */
class internal_error : public std::logic_error {
  public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

/** Raised when a polyhedron is nonempty but has no vertex at all
 *  (it contains an affine line), so vertex enumeration cannot describe it. */
class unbounded_no_vertex_error : public std::runtime_error {
  public:
    unbounded_no_vertex_error() : std::runtime_error("polyhedron is nonempty but has no vertex") {}
};

} // namespace stackyq
