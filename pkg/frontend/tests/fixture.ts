/** Annotation-pair fixtures with controlled agreement counts (mirrors the
 * backend's synthetic fixture construction). */

import { DEFAULT_RULES } from '../src/rules.js'
import type { MappingRecord, RelationCode } from '../src/types.js'

export const RULES = DEFAULT_RULES

const PARTIAL_CYCLE: Array<[string, string]> = [
  ['attribute', 'physical attribute'],
  ['mental attribute', 'attribute'],
  ['property', 'relational property'],
  ['description', 'proposition'],
  ['proposition', 'description'],
  ['event', 'action'],
  ['community', 'collection'],
]

const DIFFERENT_CYCLE: Array<[string, string]> = [
  ['collection', 'event'],
  ['description', 'state'],
  ['quality', 'quantity'],
  ['attribute', 'property'],
]

function mapping(source: string, target: string, relation: RelationCode,
                 annotator: string): MappingRecord {
  return {
    e1: { resource: 'tarifat', entityId: source },
    e2: { resource: 'ontology', entityId: target },
    relation,
    precision: 90,
    confidence: 85,
    annotator,
    note: '',
  }
}

export interface FixturePair {
  a: MappingRecord[]
  b: MappingRecord[]
  universe: string[]
}

export function agreementFixture(exact: number, partial: number,
                                 different: number, unmapped: number): FixturePair {
  const a: MappingRecord[] = []
  const b: MappingRecord[] = []
  const universe: string[] = []
  let serial = 0
  const next = () => {
    serial += 1
    const source = `s${String(serial).padStart(5, '0')}`
    universe.push(source)
    return source
  }

  for (let i = 0; i < exact; i++) {
    const s = next()
    a.push(mapping(s, 'attribute', 'SameAs', 'A1'))
    b.push(mapping(s, 'attribute', 'SameAs', 'A2'))
  }
  for (let i = 0; i < partial; i++) {
    const s = next()
    const [ta, tb] = PARTIAL_CYCLE[i % PARTIAL_CYCLE.length]!
    a.push(mapping(s, ta, 'SameAs', 'A1'))
    b.push(mapping(s, tb, 'SameAs', 'A2'))
  }
  for (let i = 0; i < different; i++) {
    const s = next()
    const [ta, tb] = DIFFERENT_CYCLE[i % DIFFERENT_CYCLE.length]!
    a.push(mapping(s, ta, 'SubClassOf', 'A1'))
    b.push(mapping(s, tb, 'SubClassOf', 'A2'))
  }
  for (let i = 0; i < unmapped; i++) {
    const s = next()
    if (i % 3 === 1) a.push(mapping(s, 'attribute', 'SameAs', 'A1'))
    if (i % 3 === 2) b.push(mapping(s, 'attribute', 'SameAs', 'A2'))
  }
  return { a, b, universe }
}
