#pragma once

#include <map>
#include <string>
#include <vector>

#include "picard/ring.hpp"

namespace picard {

/// Ring homomorphism between towers, fixed by the images of the source's
/// variables and generators. Scalars are carried over by normalizing them in
/// the target's coefficient domain (Z -> anything, Q -> Q or F_p).
class RingHom {
 public:
  RingHom() = default;
  /// Symbols missing from `images` map to the symbol of the same name in the
  /// target. The relations are verified; InvalidHomomorphism names the first
  /// relation that fails.
  RingHom(Ring source, Ring target, const std::map<std::string, Element>& images);
  /// Convenience: images as expressions in the target.
  static RingHom from_strings(Ring source, Ring target, const std::map<std::string, std::string>& images);
  static RingHom identity(Ring ring);

  const Ring& source() const { return source_; }
  const Ring& target() const { return target_; }
  const Element& image_of_slot(std::size_t slot) const { return images_.at(slot); }
  const Element& image(std::string_view name) const;

  Element apply(const Element& e) const;
  Element operator()(const Element& e) const { return apply(e); }
  /// (this o inner)(e) = this(inner(e)).
  RingHom after(const RingHom& inner) const;
  /// Images agree on every symbol.
  bool same_images(const RingHom& other) const;

 private:
  Ring source_;
  Ring target_;
  std::vector<Element> images_;

  void verify() const;
};

}  // namespace picard
