/** Workbench UI wiring: taxonomy browser, term search, mapping form,
 * disagreement review.  All data comes from the concept service or from
 * files the user loads; state is local until explicitly exported. */

import { ApiClient } from './api.js'
import { DEFAULT_RULES } from './rules.js'
import { agreementCounts, buildReference, percent, referenceTsv, reviewQueue, type Adjudication, type ReviewCard } from './review.js'
import { parseMappingsTsv } from './tsv.js'
import { TaskStore } from './tasks.js'
import { dirFor } from './text.js'
import { TreeModel } from './tree.js'
import { RELATION_INVENTORY, type AnnotationTask, type ConceptDoc, type MappingRecord } from './types.js'

const $ = <T extends HTMLElement>(selector: string): T => {
  const el = document.querySelector<T>(selector)
  if (!el) throw new Error(`missing element ${selector}`)
  return el
}

const serviceUrl = new URLSearchParams(location.search).get('service')
  ?? 'http://127.0.0.1:8000'
const api = new ApiClient(serviceUrl)
const tree = new TreeModel(api)
const tasks = new TaskStore('A1')

let currentTask: AnnotationTask | null = null
let fileA: MappingRecord[] = []
let fileB: MappingRecord[] = []

function showError(error: unknown): void {
  const box = $('#errors')
  box.textContent = String(error)
  box.classList.add('visible')
  setTimeout(() => box.classList.remove('visible'), 6000)
}

// ---- taxonomy browser -------------------------------------------------

function renderTree(): void {
  const container = $('#tree')
  container.replaceChildren(...tree.rootIds.map(renderNode))
}

function renderNode(id: number): HTMLElement {
  const node = tree.nodes.get(id)
  const li = document.createElement('div')
  li.className = 'node'
  if (!node) return li
  const row = document.createElement('div')
  row.className = 'node-row'

  const toggle = document.createElement('button')
  toggle.className = 'toggle'
  toggle.textContent = node.expanded ? '▾' : '▸'
  toggle.onclick = async () => {
    try {
      if (node.expanded) tree.collapse(id)
      else await tree.expand(id)
      renderTree()
    } catch (error) {
      showError(error)
    }
  }
  row.append(toggle)

  for (const sense of node.doc.synset) {
    const term = document.createElement('span')
    term.className = 'term'
    term.dir = dirFor(sense.term)
    term.textContent = sense.term
    row.append(term)
  }
  const pick = document.createElement('button')
  pick.className = 'pick'
  pick.textContent = `№${id}`
  pick.title = node.doc.gloss
  pick.onclick = () => selectTarget(node.doc)
  row.append(pick)
  li.append(row)

  if (node.expanded && node.children) {
    const children = document.createElement('div')
    children.className = 'children'
    children.append(...node.children.map(renderNode))
    li.append(children)
  }
  return li
}

// ---- term search ------------------------------------------------------

async function runSearch(): Promise<void> {
  const input = $('#search-input') as HTMLInputElement
  const results = $('#search-results')
  results.replaceChildren()
  try {
    const doc = await api.lookupTerm(input.value.trim())
    for (const hit of doc.results) {
      if (hit.kind !== 'concept' || hit.id === undefined) continue
      const row = document.createElement('button')
      row.className = 'result'
      row.dir = dirFor(hit.term)
      row.textContent = `${hit.term} — ${hit.gloss ?? ''}`
      const conceptId = hit.id
      row.onclick = async () => selectTarget(await api.fetchConcept(conceptId))
      results.append(row)
    }
    if (!doc.results.length) {
      results.textContent = 'no matches'
    }
  } catch (error) {
    showError(error)
  }
}

// ---- mapping form -----------------------------------------------------

function selectTarget(doc: ConceptDoc): void {
  if (!currentTask) startTask()
  if (!currentTask) return
  currentTask.target = doc.id
  const label = $('#target-label')
  label.replaceChildren()
  const name = document.createElement('span')
  const firstTerm = doc.synset[0]?.term ?? String(doc.id)
  name.dir = dirFor(firstTerm)
  name.textContent = `${firstTerm} (№${doc.id})`
  label.append(name)
  $('#target-gloss').textContent = doc.gloss
}

function startTask(): void {
  const resource = ($('#source-resource') as HTMLInputElement).value.trim() || 'external'
  const entityId = ($('#source-id') as HTMLInputElement).value.trim()
  const gloss = ($('#source-gloss') as HTMLTextAreaElement).value
  currentTask = tasks.newTask({ resource, entityId }, gloss)
  syncSliders()
}

function syncSliders(): void {
  if (!currentTask) return
  currentTask.relation = ($('#relation') as HTMLSelectElement).value as never
  currentTask.precision = Number(($('#precision') as HTMLInputElement).value)
  currentTask.confidence = Number(($('#confidence') as HTMLInputElement).value)
  $('#precision-value').textContent = `${currentTask.precision}%`
  $('#confidence-value').textContent = `${currentTask.confidence}%`
}

function submitTask(): void {
  try {
    if (!currentTask) startTask()
    if (!currentTask) return
    syncSliders()
    currentTask.source.entityId = ($('#source-id') as HTMLInputElement).value.trim()
    const record = tasks.submit(currentTask)
    const log = $('#submitted')
    const row = document.createElement('div')
    row.textContent = `${record.e1.entityId} → ${record.e2.entityId} `
      + `${record.relation} P=${record.precision} C=${record.confidence}`
    log.prepend(row)
    currentTask = null
    ;($('#source-id') as HTMLInputElement).value = ''
    ;($('#source-gloss') as HTMLTextAreaElement).value = ''
    $('#target-label').textContent = 'pick a target from the tree or search'
    $('#target-gloss').textContent = ''
  } catch (error) {
    showError(error)
  }
}

function download(name: string, text: string): void {
  const blob = new Blob([text], { type: 'text/tab-separated-values' })
  const link = document.createElement('a')
  link.href = URL.createObjectURL(blob)
  link.download = name
  link.click()
  URL.revokeObjectURL(link.href)
}

// ---- review -----------------------------------------------------------

const adjudications: Adjudication[] = []

async function loadFile(input: HTMLInputElement): Promise<MappingRecord[]> {
  const file = input.files?.[0]
  if (!file) return []
  return parseMappingsTsv(await file.text())
}

function universeOf(a: readonly MappingRecord[], b: readonly MappingRecord[]): string[] {
  const ids = new Set<string>()
  for (const record of [...a, ...b]) ids.add(record.e1.entityId)
  return [...ids].sort()
}

function renderReview(): void {
  const universe = universeOf(fileA, fileB)
  const counts = agreementCounts(fileA, fileB, DEFAULT_RULES, universe)
  $('#review-summary').textContent =
    `${counts.mappedByBoth} mapped by both — exact ${counts.exact} `
    + `(${percent(counts.exact, counts.mappedByBoth)}%), partial ${counts.partial} `
    + `(${percent(counts.partial, counts.mappedByBoth)}%), different ${counts.different} `
    + `(${percent(counts.different, counts.mappedByBoth)}%), couldn't map ${counts.couldntMap}`
  const cards = reviewQueue(fileA, fileB, DEFAULT_RULES, universe)
  const list = $('#cards')
  list.replaceChildren(...cards.slice(0, 500).map(renderCard))
  $('#card-count').textContent =
    `${cards.length} cards (${cards.filter(c => c.kind === 'different').length} different, `
    + `${cards.filter(c => c.kind === 'partial').length} partial, `
    + `${cards.filter(c => c.kind === 'weak').length} weak)`
}

function renderCard(card: ReviewCard): HTMLElement {
  const el = document.createElement('div')
  el.className = `card ${card.kind}`
  const head = document.createElement('strong')
  head.textContent = `${card.source} — ${card.kind}`
  el.append(head)
  for (const reason of card.reasons) {
    const p = document.createElement('div')
    p.textContent = reason
    el.append(p)
  }
  for (const [label, record] of [['adopt A', card.a], ['adopt B', card.b]] as const) {
    if (!record) continue
    const btn = document.createElement('button')
    btn.textContent = `${label}: ${record.e2.entityId} (${record.relation})`
    btn.onclick = () => {
      adjudications.push({
        source: card.source,
        target: record.e2.entityId,
        relation: record.relation,
        precision: record.precision,
        confidence: record.confidence,
      })
      el.classList.add('adjudicated')
    }
    el.append(btn)
  }
  return el
}

// ---- wiring -----------------------------------------------------------

export async function start(): Promise<void> {
  const select = $('#relation') as HTMLSelectElement
  for (const relation of RELATION_INVENTORY) {
    const option = document.createElement('option')
    option.value = relation
    option.textContent = relation
    select.append(option)
  }
  for (const id of ['#relation', '#precision', '#confidence']) {
    $(id).addEventListener('input', syncSliders)
  }
  $('#search-go').addEventListener('click', () => void runSearch())
  ;($('#search-input') as HTMLInputElement).addEventListener('keydown', (event) => {
    if (event.key === 'Enter') void runSearch()
  })
  $('#submit').addEventListener('click', submitTask)
  $('#export').addEventListener('click', () => download('mappings.tsv', tasks.toTsv()))
  $('#file-a').addEventListener('change', async (event) => {
    fileA = await loadFile(event.target as HTMLInputElement)
    renderReview()
  })
  $('#file-b').addEventListener('change', async (event) => {
    fileB = await loadFile(event.target as HTMLInputElement)
    renderReview()
  })
  $('#export-reference').addEventListener('click', () => {
    const universe = universeOf(fileA, fileB)
    const reference = buildReference(fileA, fileB, DEFAULT_RULES, universe, adjudications)
    download('reference.tsv', referenceTsv(reference))
  })

  try {
    await tree.loadRoots()
    renderTree()
  } catch (error) {
    showError(error)
  }
}

if (typeof document !== 'undefined' && document.readyState !== 'loading') {
  void start()
} else if (typeof document !== 'undefined') {
  document.addEventListener('DOMContentLoaded', () => void start())
}
