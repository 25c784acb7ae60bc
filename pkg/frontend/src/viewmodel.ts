// Display derivations over API payloads. Pure functions only: the UI never
// computes ratings or policies itself, it decorates what the server sent.

import type { Dataset, NLPTask, Variety } from './types.js'

export const VARIETY_LABELS: Record<Variety, string> = {
  EUROPEAN_PT: 'European PT',
  BRAZILIAN_PT: 'Brazilian PT',
  AFRICAN_PT: 'African PT',
  OTHER_PT: 'Other PT',
}

export interface PolicyBadge {
  label: string
  tone: 'green' | 'red' | 'muted'
}

export interface DatasetView {
  record: Dataset
  policyBadge: PolicyBadge
  varietyChips: string[]
  taskNames: string[]
  ratingLabel: string
  hostedCopyUrl: string | null
}

export function policyBadge(dataset: Dataset): PolicyBadge {
  switch (dataset.policy) {
    case 'METADATA_ONLY':
      return { label: 'metadata only', tone: 'green' }
    case 'BACKUP_REQUIRED':
      return { label: 'backup required', tone: 'red' }
    default:
      return { label: 'no policy', tone: 'muted' }
  }
}

export function ratingLabel(dataset: Dataset): string {
  if (!dataset.preservation) return 'unrated'
  const { score, source } = dataset.preservation
  return `${score}/5 (${source})`
}

export function toDatasetView(dataset: Dataset, tasks: NLPTask[]): DatasetView {
  const names = new Map(tasks.map((t) => [t.id, t.name]))
  const hosted = dataset.links.find((l) => l.kind === 'HOSTED_COPY')
  return {
    record: dataset,
    policyBadge: policyBadge(dataset),
    varietyChips: [...dataset.varieties].sort().map((v) => VARIETY_LABELS[v]),
    taskNames: dataset.task_ids.map((id) => names.get(id) ?? id),
    ratingLabel: ratingLabel(dataset),
    hostedCopyUrl: hosted ? hosted.url : null,
  }
}
