import { describe, expect, it } from 'vitest'

import { ApiClient, ApiError, idFromUri, type FetchLike } from '../src/api.js'
import { TreeModel } from '../src/tree.js'

/** Canned three-level service: 1 -> (2, 3), 2 -> (4). */
function fakeService() {
  const calls: string[] = []
  const concept = (id: number) => ({
    id,
    uri: `http://svc/concept/${id}`,
    gloss: `gloss ${id}`,
    example_sentence: null,
    area: '',
    era: '',
    status: 'partial',
    gap_filler: false,
    synset: [{ sense_id: id, term: `term${id}`, area: '', era: '', lexicalization_type: '', pos: 'noun' }],
    parent: null,
    relations: {},
    profile: `http://svc/concept/${id}/profile`,
    mappings: [],
  })
  const children: Record<string, number[]> = { '1': [2, 3], '2': [4], '3': [], '4': [] }
  const fetchImpl: FetchLike = async (url) => {
    calls.push(url)
    const path = url.replace('http://svc', '')
    let body: unknown
    if (path === '/') {
      body = { roots: ['http://svc/concept/1'] }
    } else if (path.startsWith('/concept/subtypes/')) {
      const id = path.split('/').pop()!
      body = { results: (children[id] ?? []).map((c) => `http://svc/concept/${c}`) }
    } else if (/^\/concept\/\d+$/.test(path)) {
      const id = Number(path.split('/').pop())
      if (!children[String(id)]) return { ok: false, status: 404, json: async () => ({}) }
      body = concept(id)
    } else {
      return { ok: false, status: 404, json: async () => ({}) }
    }
    return { ok: true, status: 200, json: async () => body }
  }
  return { calls, api: new ApiClient('http://svc', fetchImpl) }
}

describe('tree model', () => {
  it('loads roots and expands lazily', async () => {
    const { api } = fakeService()
    const tree = new TreeModel(api)
    const roots = await tree.loadRoots()
    expect(roots.map((n) => n.id)).toEqual([1])
    const kids = await tree.expand(1)
    expect(kids.map((n) => n.id)).toEqual([2, 3])
    expect(tree.isLeaf(3)).toBe(null)  // unknown until expanded
    await tree.expand(3)
    expect(tree.isLeaf(3)).toBe(true)
  })

  it('issues exactly one children request per expanded node', async () => {
    const { api, calls } = fakeService()
    const tree = new TreeModel(api)
    await tree.loadRoots()
    for (const id of [1, 2, 3, 4]) await tree.expand(id)
    // re-expanding is served from the cache
    await tree.expand(1)
    await tree.expand(2)
    const childrenCalls = calls.filter((u) => u.includes('/subtypes/'))
    expect(childrenCalls).toHaveLength(4)
    expect(new Set(childrenCalls).size).toBe(4)
    const conceptCalls = calls.filter((u) => /\/concept\/\d+$/.test(u))
    expect(conceptCalls).toHaveLength(4)  // one document per node
  })

  it('surfaces service errors', async () => {
    const { api } = fakeService()
    const tree = new TreeModel(api)
    await expect(tree.expand(99)).rejects.toThrow(ApiError)
  })
})

describe('uri parsing', () => {
  it('extracts concept ids', () => {
    expect(idFromUri('http://svc/concept/334000112')).toBe(334000112)
    expect(() => idFromUri('http://svc/other')).toThrow(ApiError)
  })
})
