import { execFileSync } from 'node:child_process'
import { mkdtempSync, writeFileSync } from 'node:fs'
import { tmpdir } from 'node:os'
import { join } from 'node:path'

import { describe, expect, it } from 'vitest'

import { TaskStore } from '../src/tasks.js'
import { formatMappingsTsv } from '../src/tsv.js'
import { agreementFixture } from './fixture.js'

/** The exported TSV must be ingestible by the backend CLI with no findings. */

function runCli(args: string[]): { status: number; stdout: string } {
  try {
    const stdout = execFileSync('ontolex', args, { encoding: 'utf-8' })
    return { status: 0, stdout }
  } catch (error) {
    const failure = error as { status?: number; stdout?: string }
    return { status: failure.status ?? 1, stdout: failure.stdout ?? '' }
  }
}

describe('cli round trip', () => {
  it('submitted mappings re-ingest cleanly', () => {
    const tasks = new TaskStore('A1')
    const decisions: Array<[string, number, 'SameAs' | 'SubClassOf', number, number]> = [
      ['entry1', 11, 'SameAs', 95, 70],
      ['entry2', 13, 'SubClassOf', 80, 85],
      ['entry3', 22, 'SameAs', 100, 100],
    ]
    for (const [source, target, relation, precision, confidence] of decisions) {
      const task = tasks.newTask({ resource: 'tarifat', entityId: source }, 'gloss')
      task.target = target
      task.relation = relation
      task.precision = precision
      task.confidence = confidence
      tasks.submit(task)
    }
    const dir = mkdtempSync(join(tmpdir(), 'workbench-'))
    const file = join(dir, 'submitted.tsv')
    writeFileSync(file, tasks.toTsv(), 'utf-8')

    const stats = runCli(['map', 'stats', file, '--paired'])
    expect(stats.status).toBe(0)
    expect(stats.stdout).toMatch(/Total\s+3/)
  })

  it('a full adjudication fixture re-ingests cleanly', () => {
    const { a } = agreementFixture(50, 20, 10, 5)
    const dir = mkdtempSync(join(tmpdir(), 'workbench-'))
    const file = join(dir, 'annotator-a.tsv')
    writeFileSync(file, formatMappingsTsv(a), 'utf-8')
    const stats = runCli(['map', 'stats', file])
    expect(stats.status).toBe(0)
  })
})
