// Canonical serialized forms served by the registry API.

export type LinkKind = 'HOMEPAGE' | 'REPOSITORY' | 'PAPER' | 'HOSTED_COPY'
export type Liveness = 'ALIVE' | 'DEAD' | 'UNPROBED'
export type Variety = 'EUROPEAN_PT' | 'BRAZILIAN_PT' | 'AFRICAN_PT' | 'OTHER_PT'
export type StoragePolicy = 'METADATA_ONLY' | 'BACKUP_REQUIRED'
export type RatingSource = 'SUBMITTED' | 'PREDICTED'

export interface ResourceLink {
  kind: LinkKind
  url: string
  alive?: Liveness
}

export interface PreservationRating {
  score: number
  source: RatingSource
}

export interface Dataset {
  id: string
  english_name: string
  native_name: string | null
  description: string | null
  task_ids: string[]
  varieties: Variety[]
  links: ResourceLink[]
  license: string | null
  year: number | null
  preservation: PreservationRating | null
  policy: StoragePolicy | null
}

export interface NLPTask {
  id: string
  name: string
  acronym: string
  papers_with_code_ids: string[]
}

export interface ApiToken {
  token: string
  label: string
  issued_at: string
  revoked: boolean
}

export interface Violation {
  field: string
  message: string
}

export const VARIETIES: Variety[] = ['EUROPEAN_PT', 'BRAZILIAN_PT', 'AFRICAN_PT', 'OTHER_PT']
export const LINK_KINDS: LinkKind[] = ['HOMEPAGE', 'REPOSITORY', 'PAPER', 'HOSTED_COPY']
