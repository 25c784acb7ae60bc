import { describe, expect, it } from 'vitest'

import type { Dataset, NLPTask } from '../src/types.js'
import { policyBadge, ratingLabel, toDatasetView } from '../src/viewmodel.js'

const TASKS: NLPTask[] = [
  { id: 't1', name: 'Named Entity Recognition', acronym: 'NER', papers_with_code_ids: [] },
  { id: 't2', name: 'Sentiment Analysis', acronym: 'SA', papers_with_code_ids: [] },
]

function dataset(overrides: Partial<Dataset> = {}): Dataset {
  return {
    id: 'ds-1',
    english_name: 'Example Corpus',
    native_name: null,
    description: null,
    task_ids: ['t1'],
    varieties: ['BRAZILIAN_PT', 'EUROPEAN_PT'],
    links: [{ kind: 'HOSTED_COPY', url: 'https://hub.example.org/x', alive: 'ALIVE' }],
    license: 'MIT',
    year: 2020,
    preservation: { score: 5, source: 'PREDICTED' },
    policy: 'METADATA_ONLY',
    ...overrides,
  }
}

describe('display derivations', () => {
  it('maps METADATA_ONLY to a green badge and BACKUP_REQUIRED to red', () => {
    expect(policyBadge(dataset())).toEqual({ label: 'metadata only', tone: 'green' })
    expect(policyBadge(dataset({ policy: 'BACKUP_REQUIRED' }))).toEqual({
      label: 'backup required',
      tone: 'red',
    })
    expect(policyBadge(dataset({ policy: null })).tone).toBe('muted')
  })

  it('labels ratings with score and source, unrated otherwise', () => {
    expect(ratingLabel(dataset())).toBe('5/5 (PREDICTED)')
    expect(ratingLabel(dataset({ preservation: { score: 2, source: 'SUBMITTED' } }))).toBe(
      '2/5 (SUBMITTED)',
    )
    expect(ratingLabel(dataset({ preservation: null }))).toBe('unrated')
  })

  it('resolves task names and falls back to the raw id', () => {
    const view = toDatasetView(dataset({ task_ids: ['t1', 'ghost'] }), TASKS)
    expect(view.taskNames).toEqual(['Named Entity Recognition', 'ghost'])
  })

  it('renders sorted human variety chips', () => {
    const view = toDatasetView(dataset(), TASKS)
    expect(view.varietyChips).toEqual(['Brazilian PT', 'European PT'])
  })

  it('surfaces the hosted copy locator when present', () => {
    expect(toDatasetView(dataset(), TASKS).hostedCopyUrl).toBe('https://hub.example.org/x')
    expect(toDatasetView(dataset({ links: [] }), TASKS).hostedCopyUrl).toBeNull()
  })

  it('is a pure function of the payload', () => {
    const ds = dataset()
    expect(toDatasetView(ds, TASKS)).toEqual(toDatasetView(ds, TASKS))
  })
})
