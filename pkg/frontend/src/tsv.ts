/** Mapping TSV wire format shared with the backend CLI.
 *
 * Columns: e1_resource, e1_id, e2_resource, e2_id, relation, precision,
 * confidence, annotator, note.  No header; '#' comments and blank lines
 * are tolerated on read.
 */

import { RELATION_INVENTORY, type MappingRecord, type RelationCode } from './types.js'

export function parseMappingsTsv(text: string): MappingRecord[] {
  const records: MappingRecord[] = []
  const lines = text.split(/\r?\n/)
  lines.forEach((line, index) => {
    if (!line.trim() || line.trimStart().startsWith('#')) return
    const cols = line.split('\t')
    if (cols.length < 7) {
      throw new Error(`row ${index + 1}: expected at least 7 columns, got ${cols.length}`)
    }
    const relation = cols[4] as RelationCode
    if (!RELATION_INVENTORY.includes(relation)) {
      throw new Error(`row ${index + 1}: unknown relation ${cols[4]}`)
    }
    records.push({
      e1: { resource: cols[0]!, entityId: cols[1]! },
      e2: { resource: cols[2]!, entityId: cols[3]! },
      relation,
      precision: Number(cols[5]),
      confidence: Number(cols[6]),
      annotator: cols[7] ?? '',
      note: cols[8] ?? '',
    })
  })
  return records
}

export function formatMappingRow(record: MappingRecord): string {
  return [
    record.e1.resource,
    record.e1.entityId,
    record.e2.resource,
    record.e2.entityId,
    record.relation,
    String(record.precision),
    String(record.confidence),
    record.annotator,
    record.note,
  ].join('\t')
}

export function formatMappingsTsv(records: readonly MappingRecord[]): string {
  return records.map(formatMappingRow).map((row) => row + '\n').join('')
}
