/** Directionality helpers: Arabic terms render right-to-left, diacritics intact. */

const ARABIC_RANGE = /[؀-ۿݐ-ݿࢠ-ࣿ]/

export function isArabic(text: string): boolean {
  return ARABIC_RANGE.test(text)
}

export function dirFor(text: string): 'rtl' | 'ltr' {
  return isArabic(text) ? 'rtl' : 'ltr'
}
