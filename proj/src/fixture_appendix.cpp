#include "dtd/fixturegen.hpp"

namespace dtd {

const std::string& appendix_a_note() {
  static const std::string note =
      "Patient presentation:\n"
      "The patient is a 45-year old female [PATIENT_FACTOR(POSITIVE):older_age] "
      "who presents with a history of mental illness in her family, with her "
      "sister suffering from bipolar disorder "
      "[PATIENT_FACTOR(POSITIVE):family_member_mental_disorder]. She reports a "
      "childhood marked by abuse, specifically physical abuse from her father "
      "[PATIENT_FACTOR(POSITIVE):childhood_abuse]. The patient further "
      "elaborates that she experienced emotional neglect from her mother for "
      "several years [PATIENT_FACTOR(POSITIVE):childhood_abuse].\n"
      "\n"
      "Illness history:\n"
      "The patient's psychiatric illness began at the age of 18 with the onset "
      "of major depressive episodes. Over the past 27 years "
      "[ILLNESS_FACTOR(POSITIVE):long_illness_duration], she has experienced "
      "multiple episodes of severe depression, including thoughts of ending her "
      "life [ILLNESS_FACTOR(POSITIVE):suicidality]. Despite the severity of her "
      "illness, she has never been hospitalized "
      "[ILLNESS_FACTOR(NEGATIVE):multiple_hospitalizations]. The patient has a "
      "history of recurrent depressive episodes "
      "[ILLNESS_FACTOR(POSITIVE):recurrent_episodes].\n"
      "\n"
      "Treatment history:\n"
      "The patient's treatment history has involved a variety of interventions. "
      "She has been prescribed multiple antidepressant medications over the "
      "years [TREATMENT_FACTOR(POSITIVE):multiple_antidepressants] at varying "
      "dosages, including increases in dose "
      "[TREATMENT_FACTOR(POSITIVE):antidepressant_dosage_increase]. However, "
      "she has experienced side effects such as weight gain, sedation, and "
      "sexual dysfunction, prompting changes in medication regimens "
      "[TREATMENT_FACTOR(POSITIVE):side_effects]. The patient has also been "
      "engaged in multiple psychotherapies "
      "[TREATMENT_FACTOR(POSITIVE):multiple_psychotherapies].\n"
      "\n"
      "Current presentation:\n"
      "During today's session, the patient reports some improvement in her "
      "symptoms. She notes a decrease in depressive symptoms such as sadness "
      "and hopelessness. However, she still experiences anhedonia "
      "[ILLNESS_FACTOR(POSITIVE):anhedonia] and struggles with maintaining "
      "positive relationships. There is evidence of physical comorbidity as the "
      "patient shares that she was recently diagnosed with diabetes "
      "[ILLNESS_FACTOR(POSITIVE):physical_comorbidity]. Additionally, she has a "
      "comorbid diagnosis of generalized anxiety disorder "
      "[ILLNESS_FACTOR(POSITIVE):mental_comorbidity]. The patient denies any "
      "current substance abuse [ILLNESS_FACTOR(NEGATIVE):substance_abuse].\n"
      "\n"
      "Discussion and plan:\n"
      "The patient's depressive symptoms seem to have an early onset "
      "[ILLNESS_FACTOR(POSITIVE):illness_early_onset], starting at 18 years "
      "old. Her history of multiple episodes of depression, suicidal ideation, "
      "and non-adherence to medication regimens suggest a severe and chronic "
      "illness course [ILLNESS_FACTOR(POSITIVE):severe_illness, "
      "ILLNESS_FACTOR(POSITIVE):recurrent_episodes, "
      "ILLNESS_FACTOR(POSITIVE):non_adherence]. We will continue to monitor her "
      "progress and consider further adjustments to her medication regimen "
      "based on her response and any side effects. Therapy sessions will focus "
      "on enhancing coping skills, reducing anhedonia, and improving "
      "interpersonal relationships. We will also explore strategies to address "
      "the impact of childhood abuse on her current mental health. Emergency "
      "contact information will be reviewed, emphasizing the importance of "
      "seeking help during times of intense distress or suicidal thoughts. "
      "Follow-up appointments will be scheduled to assess treatment response "
      "and assess any additional needs.\n";
  return note;
}

}  // namespace dtd
