#include "picard/hom.hpp"

#include "picard/errors.hpp"

namespace picard {

RingHom::RingHom(Ring source, Ring target, const std::map<std::string, Element>& images)
    : source_(std::move(source)), target_(std::move(target)) {
  for (const auto& [name, img] : images) {
    if (!source_->symbol_slot(name)) throw PresentationError("homomorphism assigns unknown symbol '" + name + "'");
    if (!same_ring(img.ring(), target_)) throw RingMismatch("image of '" + name + "' is not in the target ring");
  }
  images_.reserve(source_->width());
  for (std::size_t s = 0; s < source_->width(); ++s) {
    std::string name = source_->slot_name(s);
    auto it = images.find(name);
    if (it != images.end()) {
      images_.push_back(it->second);
    } else if (target_->symbol_slot(name)) {
      images_.push_back(target_->sym(name));
    } else {
      throw PresentationError("no image given for '" + name + "' and the target has no symbol of that name");
    }
  }
  verify();
}

RingHom RingHom::from_strings(Ring source, Ring target, const std::map<std::string, std::string>& images) {
  std::map<std::string, Element> parsed;
  for (const auto& [n, text] : images) parsed.emplace(n, target->parse(text));
  return RingHom(std::move(source), std::move(target), parsed);
}

RingHom RingHom::identity(Ring ring) { return RingHom(ring, ring, {}); }

const Element& RingHom::image(std::string_view name) const {
  auto s = source_->symbol_slot(name);
  if (!s) throw PresentationError("unknown symbol '" + std::string(name) + "'");
  return images_[*s];
}

void RingHom::verify() const {
  const std::size_t nv = source_->nvars();
  for (std::size_t k = 0; k < source_->ngens(); ++k) {
    const Generator& g = source_->gen(k);
    const Element& x = images_[nv + k];
    Element acc = x.pow(static_cast<unsigned>(g.degree));
    Element p = target_->one();
    for (int i = 0; i < g.degree; ++i) {
      acc += apply(Element(source_, g.tail[static_cast<std::size_t>(i)])) * p;
      p *= x;
    }
    if (!acc.is_zero()) {
      const TowerSpec& spec = source_->spec();
      std::size_t offset = spec.base_generator ? 1 : 0;
      std::string rel = g.base_layer ? spec.base_generator->second : spec.extensions.at(k - offset).second;
      throw InvalidHomomorphism("relation " + rel + " = 0 fails: image of '" + g.name + "' gives " + acc.to_string());
    }
  }
}

Element RingHom::apply(const Element& e) const {
  if (!same_ring(e.ring(), source_)) throw RingMismatch("element is not in the source of the homomorphism");
  const std::size_t w = source_->width();
  std::vector<std::vector<Element>> powers(w);
  auto power = [&](std::size_t s, int n) -> const Element& {
    auto& cache = powers[s];
    if (cache.empty()) cache.push_back(target_->one());
    while (static_cast<int>(cache.size()) <= n) cache.push_back(cache.back() * images_[s]);
    return cache[static_cast<std::size_t>(n)];
  };
  Element out(target_);
  for (const auto& [ex, c] : e.terms()) {
    Element m = target_->constant(c);
    for (std::size_t s = 0; s < w; ++s) {
      if (ex[s] > 0) m *= power(s, ex[s]);
    }
    out += m;
  }
  return out;
}

RingHom RingHom::after(const RingHom& inner) const {
  if (!same_ring(inner.target_, source_)) throw RingMismatch("composition of incompatible homomorphisms");
  std::map<std::string, Element> imgs;
  for (std::size_t s = 0; s < inner.source_->width(); ++s) {
    imgs.emplace(inner.source_->slot_name(s), apply(inner.images_[s]));
  }
  return RingHom(inner.source_, target_, imgs);
}

bool RingHom::same_images(const RingHom& other) const {
  if (!same_ring(source_, other.source_) || !same_ring(target_, other.target_)) return false;
  return images_ == other.images_;
}

}  // namespace picard
