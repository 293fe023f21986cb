/** Thin client for the read-only concept service. */

import type { ConceptDoc, TermLookupDoc } from './types.js'

export class ApiError extends Error {
  constructor(message: string, readonly status: number | null = null) {
    super(message)
  }
}

export type FetchLike = (url: string) => Promise<{
  ok: boolean
  status: number
  json(): Promise<unknown>
}>

export class ApiClient {
  constructor(
    readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (url) => fetch(url),
  ) {}

  private async get<T>(path: string): Promise<T> {
    let response
    try {
      response = await this.fetchImpl(this.baseUrl + path)
    } catch (error) {
      throw new ApiError(`service unreachable: ${String(error)}`)
    }
    if (!response.ok) {
      throw new ApiError(`GET ${path} failed`, response.status)
    }
    return (await response.json()) as T
  }

  fetchConcept(id: number): Promise<ConceptDoc> {
    return this.get(`/concept/${id}`)
  }

  /** Child concept ids via the subtypes relation route. */
  async fetchChildren(id: number): Promise<number[]> {
    const doc = await this.get<{ results: string[] }>(`/concept/subtypes/${id}`)
    return doc.results.map(idFromUri)
  }

  lookupTerm(term: string): Promise<TermLookupDoc> {
    const encoded = encodeURIComponent(term)
    const suffix = /^\d+$/.test(term) ? '?term=1' : ''
    return this.get(`/concept/${encoded}${suffix}`)
  }

  async roots(): Promise<number[]> {
    const doc = await this.get<{ roots: string[] }>('/')
    return doc.roots.map(idFromUri)
  }
}

export function idFromUri(uri: string): number {
  const match = uri.match(/\/concept\/(\d+)$/)
  if (!match) throw new ApiError(`not a concept URI: ${uri}`)
  return Number(match[1])
}
