/** Special-case target pairs that count as partial (not different) matches. */

export interface PartialRules {
  parentSubtypePairs: Array<[string, string[]]>
  symmetricPairs: Array<[string, string]>
}

export const DEFAULT_RULES: PartialRules = {
  parentSubtypePairs: [
    ['attribute', ['physical attribute', 'mental attribute']],
    ['property', ['intrinsic property', 'extrinsic property', 'relational property']],
    ['collection', ['community']],
    ['event', ['action']],
  ],
  symmetricPairs: [['description', 'proposition']],
}

/** Direction-blind: parent-vs-subtype in either order, or a symmetric pair. */
export function related(rules: PartialRules, a: string, b: string): boolean {
  if (a === b) return false
  for (const [general, subtypes] of rules.parentSubtypePairs) {
    if ((a === general && subtypes.includes(b)) || (b === general && subtypes.includes(a))) {
      return true
    }
  }
  return rules.symmetricPairs.some(([x, y]) =>
    (a === x && b === y) || (a === y && b === x))
}
