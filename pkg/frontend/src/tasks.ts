/** Annotation task workflow: local state, explicit save, TSV export.
 *
 * A submitted task becomes a mapping record in the shared wire format;
 * nothing leaves the browser except through the exported file.
 */

import { formatMappingsTsv } from './tsv.js'
import { clampPercent, validateRecord } from './validate.js'
import type { AnnotationTask, EntityRef, MappingRecord, RelationCode } from './types.js'

export class TaskStore {
  readonly submitted: MappingRecord[] = []

  constructor(readonly annotator: string, readonly targetResource = 'ontology') {}

  newTask(source: EntityRef, sourceGloss: string): AnnotationTask {
    return {
      source,
      sourceGloss,
      target: null,
      relation: 'SameAs',
      precision: 100,
      confidence: 100,
      annotator: this.annotator,
      status: 'pending',
    }
  }

  /** Validate and persist one decision; returns the stored record. */
  submit(task: AnnotationTask): MappingRecord {
    if (task.target === null) {
      throw new Error('choose a target concept before submitting')
    }
    const record: MappingRecord = {
      e1: task.source,
      e2: { resource: this.targetResource, entityId: String(task.target) },
      relation: task.relation as RelationCode,
      precision: clampPercent(task.precision),
      confidence: clampPercent(task.confidence),
      annotator: task.annotator,
      note: '',
    }
    const problems = validateRecord(record, this.submitted)
    if (problems.length > 0) {
      throw new Error(problems.join('; '))
    }
    this.submitted.push(record)
    task.status = 'submitted'
    return record
  }

  toTsv(): string {
    return formatMappingsTsv(this.submitted)
  }
}
