/** Disagreement review: pair classification, queue building, adjudication.
 *
 * Two annotation files are compared source by source.  Every Different and
 * Partial pair becomes a card, as does any mapping below the precision or
 * confidence floor; cards are ordered most severe first.  Adjudicating
 * every card (and adopting the agreed rest) yields a Reference mapping set.
 */

import { related, type PartialRules } from './rules.js'
import { formatMappingsTsv } from './tsv.js'
import type { MappingRecord, RelationCode } from './types.js'

export type PairKind = 'exact' | 'partial' | 'different'
export type CardKind = 'different' | 'partial' | 'weak'

export interface ReviewCard {
  source: string
  kind: CardKind
  a: MappingRecord | null
  b: MappingRecord | null
  reasons: string[]
}

export interface AgreementCounts {
  exact: number
  partial: number
  different: number
  couldntMap: number
  mappedByBoth: number
  universeSize: number
}

export interface ReviewOptions {
  precisionFloor: number
  confidenceFloor: number
}

export const DEFAULT_REVIEW_OPTIONS: ReviewOptions = {
  precisionFloor: 60,
  confidenceFloor: 60,
}

const SEVERITY: Record<CardKind, number> = { different: 0, partial: 1, weak: 2 }

export function classifyPair(
  a: MappingRecord, b: MappingRecord, rules: PartialRules,
): PairKind {
  if (a.e2.entityId === b.e2.entityId && a.relation === b.relation) return 'exact'
  if (related(rules, a.e2.entityId, b.e2.entityId)) return 'partial'
  return 'different'
}

export function bySource(records: readonly MappingRecord[]): Map<string, MappingRecord> {
  const out = new Map<string, MappingRecord>()
  for (const record of records) out.set(record.e1.entityId, record)
  return out
}

export function agreementCounts(
  a: readonly MappingRecord[],
  b: readonly MappingRecord[],
  rules: PartialRules,
  universe: readonly string[],
): AgreementCounts {
  const aMap = bySource(a)
  const bMap = bySource(b)
  const counts = { exact: 0, partial: 0, different: 0 }
  let mappedByBoth = 0
  for (const source of universe) {
    const ma = aMap.get(source)
    const mb = bMap.get(source)
    if (!ma || !mb) continue
    mappedByBoth += 1
    counts[classifyPair(ma, mb, rules)] += 1
  }
  return {
    ...counts,
    mappedByBoth,
    couldntMap: universe.length - mappedByBoth,
    universeSize: universe.length,
  }
}

export function percent(numerator: number, denominator: number): number {
  if (denominator === 0) return 0
  return Math.floor((100 * numerator) / denominator + 0.5)
}

function isWeak(record: MappingRecord, options: ReviewOptions): boolean {
  return record.precision < options.precisionFloor
    || record.confidence < options.confidenceFloor
}

export function reviewQueue(
  a: readonly MappingRecord[],
  b: readonly MappingRecord[],
  rules: PartialRules,
  universe: readonly string[],
  options: ReviewOptions = DEFAULT_REVIEW_OPTIONS,
): ReviewCard[] {
  const aMap = bySource(a)
  const bMap = bySource(b)
  const cards: ReviewCard[] = []
  for (const source of universe) {
    const ma = aMap.get(source) ?? null
    const mb = bMap.get(source) ?? null
    const reasons: string[] = []
    let kind: CardKind | null = null
    if (ma && mb) {
      const pair = classifyPair(ma, mb, rules)
      if (pair !== 'exact') {
        kind = pair
        reasons.push(pair === 'different'
          ? `targets disagree: ${ma.e2.entityId} vs ${mb.e2.entityId}`
          : `targets are rule-related: ${ma.e2.entityId} ~ ${mb.e2.entityId}`)
      }
    }
    for (const [who, record] of [['A', ma], ['B', mb]] as const) {
      if (record && isWeak(record, options)) {
        kind = kind ?? 'weak'
        reasons.push(`${who} is uncertain (P=${record.precision}, C=${record.confidence})`)
      }
    }
    if (kind) cards.push({ source, kind, a: ma, b: mb, reasons })
  }
  cards.sort((x, y) =>
    SEVERITY[x.kind] - SEVERITY[y.kind] || x.source.localeCompare(y.source))
  return cards
}

export interface Adjudication {
  source: string
  target: string
  relation: RelationCode
  precision: number
  confidence: number
  note?: string
}

/** Merge agreed pairs with adjudicated decisions into a Reference set.
 *
 * Exact pairs are adopted as they stand; every card must either be
 * adjudicated or it is left out of the reference (still couldn't map).
 */
export function buildReference(
  a: readonly MappingRecord[],
  b: readonly MappingRecord[],
  rules: PartialRules,
  universe: readonly string[],
  adjudications: readonly Adjudication[],
  targetResource = 'ontology',
): MappingRecord[] {
  const aMap = bySource(a)
  const bMap = bySource(b)
  const decided = new Map(adjudications.map((d) => [d.source, d]))
  const reference: MappingRecord[] = []
  for (const source of universe) {
    const decision = decided.get(source)
    if (decision) {
      reference.push({
        e1: { resource: sourceResource(aMap.get(source) ?? bMap.get(source)), entityId: source },
        e2: { resource: targetResource, entityId: decision.target },
        relation: decision.relation,
        precision: decision.precision,
        confidence: decision.confidence,
        annotator: 'Reference',
        note: decision.note ?? 'adjudicated',
      })
      continue
    }
    const ma = aMap.get(source)
    const mb = bMap.get(source)
    if (ma && mb && classifyPair(ma, mb, rules) === 'exact') {
      reference.push({ ...ma, annotator: 'Reference', note: 'agreed' })
    }
  }
  return reference
}

function sourceResource(record: MappingRecord | undefined): string {
  return record ? record.e1.resource : 'external'
}

export function referenceTsv(reference: readonly MappingRecord[]): string {
  return formatMappingsTsv(reference)
}
