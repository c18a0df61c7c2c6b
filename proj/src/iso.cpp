#include "phaselab/iso.hpp"

namespace phaselab {

PreservingIso build_step_up_iso(Alphabet src) {
  Alphabet dst(src.size() + 1);
  return PreservingIso{
      src, dst,
      [dst](const Word& w) { return transcode(w, dst); },
      [src](const Word& v) { return transcode(v, src); }};
}

Language::Padder transfer_padding(const Language& lang, const PreservingIso& iso) {
  if (!lang.padder)
    throw UnsupportedOperationError("language '" + lang.name + "' has no padder to transfer");
  return Language::Padder{
      [pad = lang.padder->pad, iso](const Word& y, const Word& z) {
        return iso.forward(pad(iso.backward(y), iso.backward(z)));
      },
      [dec = lang.padder->dec, iso](const Word& z) {
        return iso.forward(dec(iso.backward(z)));
      }};
}

Language conjugate_language(const Language& lang, const PreservingIso& iso) {
  if (lang.alphabet != iso.src)
    throw AlphabetMismatchError("language alphabet does not match the isomorphism source");
  Language out{iso.dst,
               "conjugate(" + lang.name + ")",
               [decide = lang.decide, backward = iso.backward](const Word& v) {
                 return decide(backward(v));
               },
               std::nullopt,
               std::nullopt};
  if (lang.padder) out.padder = transfer_padding(lang, iso);
  if (lang.witnesses)
    out.witnesses = Language::Witnesses{iso.forward(lang.witnesses->member),
                                        iso.forward(lang.witnesses->non_member)};
  return out;
}

}  // namespace phaselab
