/** The questionnaire catalog: id, category grouping, and full wording. */
import type { QuestionId } from './types.js';

export type Category = 'core_asset' | 'product_development' | 'management';

export interface Question {
  id: QuestionId;
  category: Category;
  text: string;
}

export const CATEGORY_TITLES: Record<Category, string> = {
  core_asset: 'Core Asset Development',
  product_development: 'Product Development',
  management: 'Management',
};

export const QUESTIONS: Question[] = [
  { id: 'q1', category: 'core_asset', text: 'Are all of the core assets within the software product line repository and are the resulting products consistent with the scope of the software product line?' },
  { id: 'q2', category: 'core_asset', text: 'Do all the components present in the core asset repository define the variability mechanism and tailor them for effective utilization?' },
  { id: 'q3', category: 'core_asset', text: 'Do all the COTS present or added into the core asset repository satisfy the cost-benefits ratio for the organization?' },
  { id: 'q4', category: 'core_asset', text: 'Is the core asset repository constantly updated with the addition of new assets as the product line progresses?' },
  { id: 'q5', category: 'core_asset', text: 'Does a version control management system keep track of the core asset development and utilization history?' },
  { id: 'q6', category: 'product_development', text: 'Do all the products within the software product line share a common architecture?' },
  { id: 'q7', category: 'product_development', text: 'Does the variation among products remain within the scope of the software product line?' },
  { id: 'q8', category: 'product_development', text: 'Is every product released from the product line an effective business decision for the organization?' },
  { id: 'q9', category: 'product_development', text: 'Does the software product line produce a considerable number of products; in other words, do they produce more than one product?' },
  { id: 'q10', category: 'product_development', text: 'Does every product released from the software product line meet the qualification criteria of the organization?' },
  { id: 'q11', category: 'management', text: 'Is there a configuration management system established to handle the configuration management issues present in the software product line?' },
  { id: 'q12', category: 'management', text: 'Is a comprehensive description and analysis of the domain performed for the software product line?' },
  { id: 'q13', category: 'management', text: "Does the ROI (Return on Investment) of the software product line meet the organization's financial goal?" },
  { id: 'q14', category: 'management', text: 'Are the requirements of the software product line clearly defined, analyzed, specified, verified and managed?' },
  { id: 'q15', category: 'management', text: 'Does the requirement of the software product line define the fundamental products and their features within the product line?' },
  { id: 'q16', category: 'management', text: "Does the organizational structure support the software product line's concepts and principles?" },
  { id: 'q17', category: 'management', text: 'Are the essential activities of software product line development performed iteratively?' },
];

export const QUESTION_IDS: QuestionId[] = QUESTIONS.map((q) => q.id);

export function questionsIn(category: Category): Question[] {
  return QUESTIONS.filter((q) => q.category === category);
}
