/** Shared types for the mapping workbench. */

export const RELATION_INVENTORY = [
  'SameAs',
  'SubClassOf',
  'SuperClassOf',
  'PartOf',
  'HasPart',
  'InstanceOf',
  'Type',
  'Similar',
] as const

export type RelationCode = (typeof RELATION_INVENTORY)[number]

export interface EntityRef {
  resource: string
  entityId: string
}

/** One row of the mapping TSV wire format. */
export interface MappingRecord {
  e1: EntityRef
  e2: EntityRef
  relation: RelationCode
  precision: number
  confidence: number
  annotator: string
  note: string
}

export type TaskStatus = 'pending' | 'submitted' | 'adjudicated'

/** One human decision in progress: a source entity against a candidate target. */
export interface AnnotationTask {
  source: EntityRef
  sourceGloss: string
  target: number | null
  relation: RelationCode
  precision: number
  confidence: number
  annotator: string
  status: TaskStatus
}

/** Concept document served by /concept/{id}. */
export interface ConceptDoc {
  id: number
  uri: string
  gloss: string
  example_sentence: string | null
  area: string
  era: string
  status: string
  gap_filler: boolean
  synset: SenseDoc[]
  parent: string | null
  relations: Record<string, string[]>
  profile: string
  mappings: MappingLink[]
}

export interface SenseDoc {
  sense_id: number
  term: string
  area: string
  era: string
  lexicalization_type: string
  pos: string
}

export interface MappingLink {
  resource: string
  entity_id: string
  relation: string
  precision: number
  confidence: number
}

export interface TermLookupDoc {
  term: string
  results: Array<{
    kind: 'concept' | 'lexicon'
    id?: number
    uri?: string
    term: string
    gloss?: string
    exact: boolean
  }>
}
