// dictionary.cpp - embedded subset of the standard data dictionary:
// tags referenced by the shipped action table, common identity and
// structural tags, and the repeating groups.

#include "deid/dictionary.hpp"

#include <algorithm>
#include <map>

namespace deid {

namespace {

struct RawEntry {
  std::uint16_t group;
  std::uint16_t element;
  std::uint16_t group_mask;
  std::uint16_t element_mask;
  const char* keyword;
  VR vr;
  VR alt;  // sentinel VR::UN = none (UN itself never appears as an alternate)
  const char* vm;
};

constexpr VR kNoAlt = VR::UN;

constexpr RawEntry kEntries[] = {
    {0x0002, 0x0000, 0xFFFF, 0xFFFF, "FileMetaInformationGroupLength", VR::UL, kNoAlt, "1"},
    {0x0002, 0x0001, 0xFFFF, 0xFFFF, "FileMetaInformationVersion", VR::OB, kNoAlt, "1"},
    {0x0002, 0x0002, 0xFFFF, 0xFFFF, "MediaStorageSOPClassUID", VR::UI, kNoAlt, "1"},
    {0x0002, 0x0003, 0xFFFF, 0xFFFF, "MediaStorageSOPInstanceUID", VR::UI, kNoAlt, "1"},
    {0x0002, 0x0010, 0xFFFF, 0xFFFF, "TransferSyntaxUID", VR::UI, kNoAlt, "1"},
    {0x0002, 0x0012, 0xFFFF, 0xFFFF, "ImplementationClassUID", VR::UI, kNoAlt, "1"},
    {0x0002, 0x0013, 0xFFFF, 0xFFFF, "ImplementationVersionName", VR::SH, kNoAlt, "1"},
    {0x0002, 0x0016, 0xFFFF, 0xFFFF, "SourceApplicationEntityTitle", VR::AE, kNoAlt, "1"},

    {0x0008, 0x0005, 0xFFFF, 0xFFFF, "SpecificCharacterSet", VR::CS, kNoAlt, "1-n"},
    {0x0008, 0x0008, 0xFFFF, 0xFFFF, "ImageType", VR::CS, kNoAlt, "2-n"},
    {0x0008, 0x0012, 0xFFFF, 0xFFFF, "InstanceCreationDate", VR::DA, kNoAlt, "1"},
    {0x0008, 0x0013, 0xFFFF, 0xFFFF, "InstanceCreationTime", VR::TM, kNoAlt, "1"},
    {0x0008, 0x0014, 0xFFFF, 0xFFFF, "InstanceCreatorUID", VR::UI, kNoAlt, "1"},
    {0x0008, 0x0015, 0xFFFF, 0xFFFF, "InstanceCoercionDateTime", VR::DT, kNoAlt, "1"},
    {0x0008, 0x0016, 0xFFFF, 0xFFFF, "SOPClassUID", VR::UI, kNoAlt, "1"},
    {0x0008, 0x0018, 0xFFFF, 0xFFFF, "SOPInstanceUID", VR::UI, kNoAlt, "1"},
    {0x0008, 0x0020, 0xFFFF, 0xFFFF, "StudyDate", VR::DA, kNoAlt, "1"},
    {0x0008, 0x0021, 0xFFFF, 0xFFFF, "SeriesDate", VR::DA, kNoAlt, "1"},
    {0x0008, 0x0022, 0xFFFF, 0xFFFF, "AcquisitionDate", VR::DA, kNoAlt, "1"},
    {0x0008, 0x0023, 0xFFFF, 0xFFFF, "ContentDate", VR::DA, kNoAlt, "1"},
    {0x0008, 0x002A, 0xFFFF, 0xFFFF, "AcquisitionDateTime", VR::DT, kNoAlt, "1"},
    {0x0008, 0x0030, 0xFFFF, 0xFFFF, "StudyTime", VR::TM, kNoAlt, "1"},
    {0x0008, 0x0031, 0xFFFF, 0xFFFF, "SeriesTime", VR::TM, kNoAlt, "1"},
    {0x0008, 0x0032, 0xFFFF, 0xFFFF, "AcquisitionTime", VR::TM, kNoAlt, "1"},
    {0x0008, 0x0033, 0xFFFF, 0xFFFF, "ContentTime", VR::TM, kNoAlt, "1"},
    {0x0008, 0x0050, 0xFFFF, 0xFFFF, "AccessionNumber", VR::SH, kNoAlt, "1"},
    {0x0008, 0x0054, 0xFFFF, 0xFFFF, "RetrieveAETitle", VR::AE, kNoAlt, "1-n"},
    {0x0008, 0x0058, 0xFFFF, 0xFFFF, "FailedSOPInstanceUIDList", VR::UI, kNoAlt, "1-n"},
    {0x0008, 0x0060, 0xFFFF, 0xFFFF, "Modality", VR::CS, kNoAlt, "1"},
    {0x0008, 0x0064, 0xFFFF, 0xFFFF, "ConversionType", VR::CS, kNoAlt, "1"},
    {0x0008, 0x0070, 0xFFFF, 0xFFFF, "Manufacturer", VR::LO, kNoAlt, "1"},
    {0x0008, 0x0080, 0xFFFF, 0xFFFF, "InstitutionName", VR::LO, kNoAlt, "1"},
    {0x0008, 0x0081, 0xFFFF, 0xFFFF, "InstitutionAddress", VR::ST, kNoAlt, "1"},
    {0x0008, 0x0082, 0xFFFF, 0xFFFF, "InstitutionCodeSequence", VR::SQ, kNoAlt, "1"},
    {0x0008, 0x0090, 0xFFFF, 0xFFFF, "ReferringPhysicianName", VR::PN, kNoAlt, "1"},
    {0x0008, 0x0092, 0xFFFF, 0xFFFF, "ReferringPhysicianAddress", VR::ST, kNoAlt, "1"},
    {0x0008, 0x0094, 0xFFFF, 0xFFFF, "ReferringPhysicianTelephoneNumbers", VR::SH, kNoAlt, "1-n"},
    {0x0008, 0x0096, 0xFFFF, 0xFFFF, "ReferringPhysicianIdentificationSequence", VR::SQ, kNoAlt, "1"},
    {0x0008, 0x009C, 0xFFFF, 0xFFFF, "ConsultingPhysicianName", VR::PN, kNoAlt, "1-n"},
    {0x0008, 0x009D, 0xFFFF, 0xFFFF, "ConsultingPhysicianIdentificationSequence", VR::SQ, kNoAlt, "1"},
    {0x0008, 0x0100, 0xFFFF, 0xFFFF, "CodeValue", VR::SH, kNoAlt, "1"},
    {0x0008, 0x0102, 0xFFFF, 0xFFFF, "CodingSchemeDesignator", VR::SH, kNoAlt, "1"},
    {0x0008, 0x0103, 0xFFFF, 0xFFFF, "CodingSchemeVersion", VR::SH, kNoAlt, "1"},
    {0x0008, 0x0104, 0xFFFF, 0xFFFF, "CodeMeaning", VR::LO, kNoAlt, "1"},
    {0x0008, 0x010D, 0xFFFF, 0xFFFF, "ContextGroupExtensionCreatorUID", VR::UI, kNoAlt, "1"},
    {0x0008, 0x0201, 0xFFFF, 0xFFFF, "TimezoneOffsetFromUTC", VR::SH, kNoAlt, "1"},
    {0x0008, 0x1010, 0xFFFF, 0xFFFF, "StationName", VR::SH, kNoAlt, "1"},
    {0x0008, 0x1030, 0xFFFF, 0xFFFF, "StudyDescription", VR::LO, kNoAlt, "1"},
    {0x0008, 0x103E, 0xFFFF, 0xFFFF, "SeriesDescription", VR::LO, kNoAlt, "1"},
    {0x0008, 0x1040, 0xFFFF, 0xFFFF, "InstitutionalDepartmentName", VR::LO, kNoAlt, "1"},
    {0x0008, 0x1048, 0xFFFF, 0xFFFF, "PhysiciansOfRecord", VR::PN, kNoAlt, "1-n"},
    {0x0008, 0x1049, 0xFFFF, 0xFFFF, "PhysiciansOfRecordIdentificationSequence", VR::SQ, kNoAlt, "1"},
    {0x0008, 0x1050, 0xFFFF, 0xFFFF, "PerformingPhysicianName", VR::PN, kNoAlt, "1-n"},
    {0x0008, 0x1052, 0xFFFF, 0xFFFF, "PerformingPhysicianIdentificationSequence", VR::SQ, kNoAlt, "1"},
    {0x0008, 0x1060, 0xFFFF, 0xFFFF, "NameOfPhysiciansReadingStudy", VR::PN, kNoAlt, "1-n"},
    {0x0008, 0x1062, 0xFFFF, 0xFFFF, "PhysiciansReadingStudyIdentificationSequence", VR::SQ, kNoAlt, "1"},
    {0x0008, 0x1070, 0xFFFF, 0xFFFF, "OperatorsName", VR::PN, kNoAlt, "1-n"},
    {0x0008, 0x1072, 0xFFFF, 0xFFFF, "OperatorIdentificationSequence", VR::SQ, kNoAlt, "1"},
    {0x0008, 0x1080, 0xFFFF, 0xFFFF, "AdmittingDiagnosesDescription", VR::LO, kNoAlt, "1-n"},
    {0x0008, 0x1084, 0xFFFF, 0xFFFF, "AdmittingDiagnosesCodeSequence", VR::SQ, kNoAlt, "1"},
    {0x0008, 0x1090, 0xFFFF, 0xFFFF, "ManufacturerModelName", VR::LO, kNoAlt, "1"},
    {0x0008, 0x1110, 0xFFFF, 0xFFFF, "ReferencedStudySequence", VR::SQ, kNoAlt, "1"},
    {0x0008, 0x1111, 0xFFFF, 0xFFFF, "ReferencedPerformedProcedureStepSequence", VR::SQ, kNoAlt, "1"},
    {0x0008, 0x1115, 0xFFFF, 0xFFFF, "ReferencedSeriesSequence", VR::SQ, kNoAlt, "1"},
    {0x0008, 0x1120, 0xFFFF, 0xFFFF, "ReferencedPatientSequence", VR::SQ, kNoAlt, "1"},
    {0x0008, 0x1140, 0xFFFF, 0xFFFF, "ReferencedImageSequence", VR::SQ, kNoAlt, "1"},
    {0x0008, 0x1150, 0xFFFF, 0xFFFF, "ReferencedSOPClassUID", VR::UI, kNoAlt, "1"},
    {0x0008, 0x1155, 0xFFFF, 0xFFFF, "ReferencedSOPInstanceUID", VR::UI, kNoAlt, "1"},
    {0x0008, 0x2111, 0xFFFF, 0xFFFF, "DerivationDescription", VR::ST, kNoAlt, "1"},
    {0x0008, 0x2112, 0xFFFF, 0xFFFF, "SourceImageSequence", VR::SQ, kNoAlt, "1"},
    {0x0008, 0x3010, 0xFFFF, 0xFFFF, "IrradiationEventUID", VR::UI, kNoAlt, "1-n"},
    {0x0008, 0x4000, 0xFFFF, 0xFFFF, "IdentifyingComments", VR::LT, kNoAlt, "1"},
    {0x0008, 0x9215, 0xFFFF, 0xFFFF, "DerivationCodeSequence", VR::SQ, kNoAlt, "1"},

    {0x0010, 0x0010, 0xFFFF, 0xFFFF, "PatientName", VR::PN, kNoAlt, "1"},
    {0x0010, 0x0020, 0xFFFF, 0xFFFF, "PatientID", VR::LO, kNoAlt, "1"},
    {0x0010, 0x0021, 0xFFFF, 0xFFFF, "IssuerOfPatientID", VR::LO, kNoAlt, "1"},
    {0x0010, 0x0030, 0xFFFF, 0xFFFF, "PatientBirthDate", VR::DA, kNoAlt, "1"},
    {0x0010, 0x0032, 0xFFFF, 0xFFFF, "PatientBirthTime", VR::TM, kNoAlt, "1"},
    {0x0010, 0x0040, 0xFFFF, 0xFFFF, "PatientSex", VR::CS, kNoAlt, "1"},
    {0x0010, 0x0050, 0xFFFF, 0xFFFF, "PatientInsurancePlanCodeSequence", VR::SQ, kNoAlt, "1"},
    {0x0010, 0x0101, 0xFFFF, 0xFFFF, "PatientPrimaryLanguageCodeSequence", VR::SQ, kNoAlt, "1"},
    {0x0010, 0x0102, 0xFFFF, 0xFFFF, "PatientPrimaryLanguageModifierCodeSequence", VR::SQ, kNoAlt, "1"},
    {0x0010, 0x1000, 0xFFFF, 0xFFFF, "OtherPatientIDs", VR::LO, kNoAlt, "1-n"},
    {0x0010, 0x1001, 0xFFFF, 0xFFFF, "OtherPatientNames", VR::PN, kNoAlt, "1-n"},
    {0x0010, 0x1002, 0xFFFF, 0xFFFF, "OtherPatientIDsSequence", VR::SQ, kNoAlt, "1"},
    {0x0010, 0x1005, 0xFFFF, 0xFFFF, "PatientBirthName", VR::PN, kNoAlt, "1"},
    {0x0010, 0x1010, 0xFFFF, 0xFFFF, "PatientAge", VR::AS, kNoAlt, "1"},
    {0x0010, 0x1020, 0xFFFF, 0xFFFF, "PatientSize", VR::DS, kNoAlt, "1"},
    {0x0010, 0x1030, 0xFFFF, 0xFFFF, "PatientWeight", VR::DS, kNoAlt, "1"},
    {0x0010, 0x1040, 0xFFFF, 0xFFFF, "PatientAddress", VR::LO, kNoAlt, "1"},
    {0x0010, 0x1060, 0xFFFF, 0xFFFF, "PatientMotherBirthName", VR::PN, kNoAlt, "1"},
    {0x0010, 0x1080, 0xFFFF, 0xFFFF, "MilitaryRank", VR::LO, kNoAlt, "1"},
    {0x0010, 0x1081, 0xFFFF, 0xFFFF, "BranchOfService", VR::LO, kNoAlt, "1"},
    {0x0010, 0x1090, 0xFFFF, 0xFFFF, "MedicalRecordLocator", VR::LO, kNoAlt, "1"},
    {0x0010, 0x1100, 0xFFFF, 0xFFFF, "ReferencedPatientPhotoSequence", VR::SQ, kNoAlt, "1"},
    {0x0010, 0x2000, 0xFFFF, 0xFFFF, "MedicalAlerts", VR::LO, kNoAlt, "1-n"},
    {0x0010, 0x2110, 0xFFFF, 0xFFFF, "Allergies", VR::LO, kNoAlt, "1-n"},
    {0x0010, 0x2150, 0xFFFF, 0xFFFF, "CountryOfResidence", VR::LO, kNoAlt, "1"},
    {0x0010, 0x2152, 0xFFFF, 0xFFFF, "RegionOfResidence", VR::LO, kNoAlt, "1"},
    {0x0010, 0x2154, 0xFFFF, 0xFFFF, "PatientTelephoneNumbers", VR::SH, kNoAlt, "1-n"},
    {0x0010, 0x2155, 0xFFFF, 0xFFFF, "PatientTelecomInformation", VR::LT, kNoAlt, "1"},
    {0x0010, 0x2160, 0xFFFF, 0xFFFF, "EthnicGroup", VR::SH, kNoAlt, "1"},
    {0x0010, 0x2180, 0xFFFF, 0xFFFF, "Occupation", VR::SH, kNoAlt, "1"},
    {0x0010, 0x21A0, 0xFFFF, 0xFFFF, "SmokingStatus", VR::CS, kNoAlt, "1"},
    {0x0010, 0x21B0, 0xFFFF, 0xFFFF, "AdditionalPatientHistory", VR::LT, kNoAlt, "1"},
    {0x0010, 0x21C0, 0xFFFF, 0xFFFF, "PregnancyStatus", VR::US, kNoAlt, "1"},
    {0x0010, 0x21D0, 0xFFFF, 0xFFFF, "LastMenstrualDate", VR::DA, kNoAlt, "1"},
    {0x0010, 0x21F0, 0xFFFF, 0xFFFF, "PatientReligiousPreference", VR::LO, kNoAlt, "1"},
    {0x0010, 0x2203, 0xFFFF, 0xFFFF, "PatientSexNeutered", VR::CS, kNoAlt, "1"},
    {0x0010, 0x2297, 0xFFFF, 0xFFFF, "ResponsiblePerson", VR::PN, kNoAlt, "1"},
    {0x0010, 0x2299, 0xFFFF, 0xFFFF, "ResponsibleOrganization", VR::LO, kNoAlt, "1"},
    {0x0010, 0x4000, 0xFFFF, 0xFFFF, "PatientComments", VR::LT, kNoAlt, "1"},

    {0x0012, 0x0010, 0xFFFF, 0xFFFF, "ClinicalTrialSponsorName", VR::LO, kNoAlt, "1"},
    {0x0012, 0x0020, 0xFFFF, 0xFFFF, "ClinicalTrialProtocolID", VR::LO, kNoAlt, "1"},
    {0x0012, 0x0021, 0xFFFF, 0xFFFF, "ClinicalTrialProtocolName", VR::LO, kNoAlt, "1"},
    {0x0012, 0x0030, 0xFFFF, 0xFFFF, "ClinicalTrialSiteID", VR::LO, kNoAlt, "1"},
    {0x0012, 0x0031, 0xFFFF, 0xFFFF, "ClinicalTrialSiteName", VR::LO, kNoAlt, "1"},
    {0x0012, 0x0040, 0xFFFF, 0xFFFF, "ClinicalTrialSubjectID", VR::LO, kNoAlt, "1"},
    {0x0012, 0x0042, 0xFFFF, 0xFFFF, "ClinicalTrialSubjectReadingID", VR::LO, kNoAlt, "1"},
    {0x0012, 0x0050, 0xFFFF, 0xFFFF, "ClinicalTrialTimePointID", VR::LO, kNoAlt, "1"},
    {0x0012, 0x0051, 0xFFFF, 0xFFFF, "ClinicalTrialTimePointDescription", VR::ST, kNoAlt, "1"},
    {0x0012, 0x0060, 0xFFFF, 0xFFFF, "ClinicalTrialCoordinatingCenterName", VR::LO, kNoAlt, "1"},
    {0x0012, 0x0062, 0xFFFF, 0xFFFF, "PatientIdentityRemoved", VR::CS, kNoAlt, "1"},
    {0x0012, 0x0063, 0xFFFF, 0xFFFF, "DeidentificationMethod", VR::LO, kNoAlt, "1-n"},
    {0x0012, 0x0064, 0xFFFF, 0xFFFF, "DeidentificationMethodCodeSequence", VR::SQ, kNoAlt, "1"},
    {0x0012, 0x0071, 0xFFFF, 0xFFFF, "ClinicalTrialSeriesID", VR::LO, kNoAlt, "1"},
    {0x0012, 0x0072, 0xFFFF, 0xFFFF, "ClinicalTrialSeriesDescription", VR::LO, kNoAlt, "1"},
    {0x0012, 0x0081, 0xFFFF, 0xFFFF, "ClinicalTrialProtocolEthicsCommitteeName", VR::LO, kNoAlt, "1"},
    {0x0012, 0x0082, 0xFFFF, 0xFFFF, "ClinicalTrialProtocolEthicsCommitteeApprovalNumber", VR::LO, kNoAlt, "1"},

    {0x0018, 0x0010, 0xFFFF, 0xFFFF, "ContrastBolusAgent", VR::LO, kNoAlt, "1"},
    {0x0018, 0x1000, 0xFFFF, 0xFFFF, "DeviceSerialNumber", VR::LO, kNoAlt, "1"},
    {0x0018, 0x1002, 0xFFFF, 0xFFFF, "DeviceUID", VR::UI, kNoAlt, "1"},
    {0x0018, 0x1004, 0xFFFF, 0xFFFF, "PlateID", VR::LO, kNoAlt, "1"},
    {0x0018, 0x1005, 0xFFFF, 0xFFFF, "GantryID", VR::LO, kNoAlt, "1"},
    {0x0018, 0x1008, 0xFFFF, 0xFFFF, "CassetteID", VR::LO, kNoAlt, "1"},
    {0x0018, 0x1030, 0xFFFF, 0xFFFF, "ProtocolName", VR::LO, kNoAlt, "1"},
    {0x0018, 0x1400, 0xFFFF, 0xFFFF, "AcquisitionDeviceProcessingDescription", VR::LO, kNoAlt, "1"},
    {0x0018, 0x4000, 0xFFFF, 0xFFFF, "AcquisitionComments", VR::LT, kNoAlt, "1"},
    {0x0018, 0x700A, 0xFFFF, 0xFFFF, "DetectorID", VR::SH, kNoAlt, "1"},
    {0x0018, 0x9424, 0xFFFF, 0xFFFF, "AcquisitionProtocolDescription", VR::LT, kNoAlt, "1"},
    {0x0018, 0xA003, 0xFFFF, 0xFFFF, "ContributionDescription", VR::ST, kNoAlt, "1"},

    {0x0020, 0x000D, 0xFFFF, 0xFFFF, "StudyInstanceUID", VR::UI, kNoAlt, "1"},
    {0x0020, 0x000E, 0xFFFF, 0xFFFF, "SeriesInstanceUID", VR::UI, kNoAlt, "1"},
    {0x0020, 0x0010, 0xFFFF, 0xFFFF, "StudyID", VR::SH, kNoAlt, "1"},
    {0x0020, 0x0011, 0xFFFF, 0xFFFF, "SeriesNumber", VR::IS, kNoAlt, "1"},
    {0x0020, 0x0013, 0xFFFF, 0xFFFF, "InstanceNumber", VR::IS, kNoAlt, "1"},
    {0x0020, 0x0052, 0xFFFF, 0xFFFF, "FrameOfReferenceUID", VR::UI, kNoAlt, "1"},
    {0x0020, 0x0200, 0xFFFF, 0xFFFF, "SynchronizationFrameOfReferenceUID", VR::UI, kNoAlt, "1"},
    {0x0020, 0x3401, 0xFFFF, 0xFFFF, "ModifyingDeviceID", VR::CS, kNoAlt, "1"},
    {0x0020, 0x3404, 0xFFFF, 0xFFFF, "ModifyingDeviceManufacturer", VR::LO, kNoAlt, "1"},
    {0x0020, 0x3406, 0xFFFF, 0xFFFF, "ModifiedImageDescription", VR::LO, kNoAlt, "1"},
    {0x0020, 0x4000, 0xFFFF, 0xFFFF, "ImageComments", VR::LT, kNoAlt, "1"},
    {0x0020, 0x9158, 0xFFFF, 0xFFFF, "FrameComments", VR::LT, kNoAlt, "1"},
    {0x0020, 0x9161, 0xFFFF, 0xFFFF, "ConcatenationUID", VR::UI, kNoAlt, "1"},
    {0x0020, 0x9164, 0xFFFF, 0xFFFF, "DimensionOrganizationUID", VR::UI, kNoAlt, "1"},

    {0x0028, 0x0002, 0xFFFF, 0xFFFF, "SamplesPerPixel", VR::US, kNoAlt, "1"},
    {0x0028, 0x0004, 0xFFFF, 0xFFFF, "PhotometricInterpretation", VR::CS, kNoAlt, "1"},
    {0x0028, 0x0008, 0xFFFF, 0xFFFF, "NumberOfFrames", VR::IS, kNoAlt, "1"},
    {0x0028, 0x0010, 0xFFFF, 0xFFFF, "Rows", VR::US, kNoAlt, "1"},
    {0x0028, 0x0011, 0xFFFF, 0xFFFF, "Columns", VR::US, kNoAlt, "1"},
    {0x0028, 0x0100, 0xFFFF, 0xFFFF, "BitsAllocated", VR::US, kNoAlt, "1"},
    {0x0028, 0x0101, 0xFFFF, 0xFFFF, "BitsStored", VR::US, kNoAlt, "1"},
    {0x0028, 0x0102, 0xFFFF, 0xFFFF, "HighBit", VR::US, kNoAlt, "1"},
    {0x0028, 0x0103, 0xFFFF, 0xFFFF, "PixelRepresentation", VR::US, kNoAlt, "1"},
    {0x0028, 0x1199, 0xFFFF, 0xFFFF, "PaletteColorLookupTableUID", VR::UI, kNoAlt, "1"},
    {0x0028, 0x1214, 0xFFFF, 0xFFFF, "LargePaletteColorLookupTableUID", VR::UI, kNoAlt, "1"},

    {0x0032, 0x0012, 0xFFFF, 0xFFFF, "StudyIDIssuer", VR::LO, kNoAlt, "1"},
    {0x0032, 0x1020, 0xFFFF, 0xFFFF, "ScheduledStudyLocation", VR::LO, kNoAlt, "1"},
    {0x0032, 0x1021, 0xFFFF, 0xFFFF, "ScheduledStudyLocationAETitle", VR::AE, kNoAlt, "1-n"},
    {0x0032, 0x1030, 0xFFFF, 0xFFFF, "ReasonForStudy", VR::LO, kNoAlt, "1"},
    {0x0032, 0x1032, 0xFFFF, 0xFFFF, "RequestingPhysician", VR::PN, kNoAlt, "1"},
    {0x0032, 0x1033, 0xFFFF, 0xFFFF, "RequestingService", VR::LO, kNoAlt, "1"},
    {0x0032, 0x1060, 0xFFFF, 0xFFFF, "RequestedProcedureDescription", VR::LO, kNoAlt, "1"},
    {0x0032, 0x1064, 0xFFFF, 0xFFFF, "RequestedProcedureCodeSequence", VR::SQ, kNoAlt, "1"},
    {0x0032, 0x1070, 0xFFFF, 0xFFFF, "RequestedContrastAgent", VR::LO, kNoAlt, "1"},
    {0x0032, 0x4000, 0xFFFF, 0xFFFF, "StudyComments", VR::LT, kNoAlt, "1"},

    {0x0038, 0x0004, 0xFFFF, 0xFFFF, "ReferencedPatientAliasSequence", VR::SQ, kNoAlt, "1"},
    {0x0038, 0x0010, 0xFFFF, 0xFFFF, "AdmissionID", VR::LO, kNoAlt, "1"},
    {0x0038, 0x0011, 0xFFFF, 0xFFFF, "IssuerOfAdmissionID", VR::LO, kNoAlt, "1"},
    {0x0038, 0x001E, 0xFFFF, 0xFFFF, "ScheduledPatientInstitutionResidence", VR::LO, kNoAlt, "1"},
    {0x0038, 0x0020, 0xFFFF, 0xFFFF, "AdmittingDate", VR::DA, kNoAlt, "1"},
    {0x0038, 0x0021, 0xFFFF, 0xFFFF, "AdmittingTime", VR::TM, kNoAlt, "1"},
    {0x0038, 0x0040, 0xFFFF, 0xFFFF, "DischargeDiagnosisDescription", VR::LO, kNoAlt, "1"},
    {0x0038, 0x0050, 0xFFFF, 0xFFFF, "SpecialNeeds", VR::LO, kNoAlt, "1"},
    {0x0038, 0x0060, 0xFFFF, 0xFFFF, "ServiceEpisodeID", VR::LO, kNoAlt, "1"},
    {0x0038, 0x0061, 0xFFFF, 0xFFFF, "IssuerOfServiceEpisodeID", VR::LO, kNoAlt, "1"},
    {0x0038, 0x0062, 0xFFFF, 0xFFFF, "ServiceEpisodeDescription", VR::LO, kNoAlt, "1"},
    {0x0038, 0x0300, 0xFFFF, 0xFFFF, "CurrentPatientLocation", VR::LO, kNoAlt, "1"},
    {0x0038, 0x0400, 0xFFFF, 0xFFFF, "PatientInstitutionResidence", VR::LO, kNoAlt, "1"},
    {0x0038, 0x0500, 0xFFFF, 0xFFFF, "PatientState", VR::LO, kNoAlt, "1"},
    {0x0038, 0x4000, 0xFFFF, 0xFFFF, "VisitComments", VR::LT, kNoAlt, "1"},

    {0x0040, 0x0001, 0xFFFF, 0xFFFF, "ScheduledStationAETitle", VR::AE, kNoAlt, "1-n"},
    {0x0040, 0x0002, 0xFFFF, 0xFFFF, "ScheduledProcedureStepStartDate", VR::DA, kNoAlt, "1"},
    {0x0040, 0x0003, 0xFFFF, 0xFFFF, "ScheduledProcedureStepStartTime", VR::TM, kNoAlt, "1"},
    {0x0040, 0x0004, 0xFFFF, 0xFFFF, "ScheduledProcedureStepEndDate", VR::DA, kNoAlt, "1"},
    {0x0040, 0x0005, 0xFFFF, 0xFFFF, "ScheduledProcedureStepEndTime", VR::TM, kNoAlt, "1"},
    {0x0040, 0x0006, 0xFFFF, 0xFFFF, "ScheduledPerformingPhysicianName", VR::PN, kNoAlt, "1"},
    {0x0040, 0x0007, 0xFFFF, 0xFFFF, "ScheduledProcedureStepDescription", VR::LO, kNoAlt, "1"},
    {0x0040, 0x0009, 0xFFFF, 0xFFFF, "ScheduledProcedureStepID", VR::SH, kNoAlt, "1"},
    {0x0040, 0x0010, 0xFFFF, 0xFFFF, "ScheduledStationName", VR::SH, kNoAlt, "1-n"},
    {0x0040, 0x0011, 0xFFFF, 0xFFFF, "ScheduledProcedureStepLocation", VR::SH, kNoAlt, "1"},
    {0x0040, 0x0012, 0xFFFF, 0xFFFF, "PreMedication", VR::LO, kNoAlt, "1"},
    {0x0040, 0x0241, 0xFFFF, 0xFFFF, "PerformedStationAETitle", VR::AE, kNoAlt, "1"},
    {0x0040, 0x0242, 0xFFFF, 0xFFFF, "PerformedStationName", VR::SH, kNoAlt, "1"},
    {0x0040, 0x0243, 0xFFFF, 0xFFFF, "PerformedLocation", VR::SH, kNoAlt, "1"},
    {0x0040, 0x0244, 0xFFFF, 0xFFFF, "PerformedProcedureStepStartDate", VR::DA, kNoAlt, "1"},
    {0x0040, 0x0245, 0xFFFF, 0xFFFF, "PerformedProcedureStepStartTime", VR::TM, kNoAlt, "1"},
    {0x0040, 0x0250, 0xFFFF, 0xFFFF, "PerformedProcedureStepEndDate", VR::DA, kNoAlt, "1"},
    {0x0040, 0x0251, 0xFFFF, 0xFFFF, "PerformedProcedureStepEndTime", VR::TM, kNoAlt, "1"},
    {0x0040, 0x0253, 0xFFFF, 0xFFFF, "PerformedProcedureStepID", VR::SH, kNoAlt, "1"},
    {0x0040, 0x0254, 0xFFFF, 0xFFFF, "PerformedProcedureStepDescription", VR::LO, kNoAlt, "1"},
    {0x0040, 0x0255, 0xFFFF, 0xFFFF, "PerformedProcedureTypeDescription", VR::LO, kNoAlt, "1"},
    {0x0040, 0x0275, 0xFFFF, 0xFFFF, "RequestAttributesSequence", VR::SQ, kNoAlt, "1"},
    {0x0040, 0x0280, 0xFFFF, 0xFFFF, "CommentsOnThePerformedProcedureStep", VR::ST, kNoAlt, "1"},
    {0x0040, 0x050A, 0xFFFF, 0xFFFF, "SpecimenAccessionNumber", VR::LO, kNoAlt, "1"},
    {0x0040, 0x0512, 0xFFFF, 0xFFFF, "ContainerIdentifier", VR::LO, kNoAlt, "1"},
    {0x0040, 0x051A, 0xFFFF, 0xFFFF, "ContainerDescription", VR::LO, kNoAlt, "1"},
    {0x0040, 0x0551, 0xFFFF, 0xFFFF, "SpecimenIdentifier", VR::LO, kNoAlt, "1"},
    {0x0040, 0x0600, 0xFFFF, 0xFFFF, "SpecimenShortDescription", VR::LO, kNoAlt, "1"},
    {0x0040, 0x0602, 0xFFFF, 0xFFFF, "SpecimenDetailedDescription", VR::UT, kNoAlt, "1"},
    {0x0040, 0x06FA, 0xFFFF, 0xFFFF, "SlideIdentifier", VR::LO, kNoAlt, "1"},
    {0x0040, 0x1001, 0xFFFF, 0xFFFF, "RequestedProcedureID", VR::SH, kNoAlt, "1"},
    {0x0040, 0x1010, 0xFFFF, 0xFFFF, "NamesOfIntendedRecipientsOfResults", VR::PN, kNoAlt, "1-n"},
    {0x0040, 0x1011, 0xFFFF, 0xFFFF, "IntendedRecipientsOfResultsIdentificationSequence", VR::SQ, kNoAlt, "1"},
    {0x0040, 0x1101, 0xFFFF, 0xFFFF, "PersonIdentificationCodeSequence", VR::SQ, kNoAlt, "1"},
    {0x0040, 0x1102, 0xFFFF, 0xFFFF, "PersonAddress", VR::ST, kNoAlt, "1"},
    {0x0040, 0x1103, 0xFFFF, 0xFFFF, "PersonTelephoneNumbers", VR::LO, kNoAlt, "1-n"},
    {0x0040, 0x1104, 0xFFFF, 0xFFFF, "PersonTelecomInformation", VR::LT, kNoAlt, "1"},
    {0x0040, 0x1400, 0xFFFF, 0xFFFF, "RequestedProcedureComments", VR::LT, kNoAlt, "1"},
    {0x0040, 0x2001, 0xFFFF, 0xFFFF, "ReasonForTheImagingServiceRequest", VR::LO, kNoAlt, "1"},
    {0x0040, 0x2008, 0xFFFF, 0xFFFF, "OrderEnteredBy", VR::PN, kNoAlt, "1"},
    {0x0040, 0x2009, 0xFFFF, 0xFFFF, "OrderEntererLocation", VR::SH, kNoAlt, "1"},
    {0x0040, 0x2010, 0xFFFF, 0xFFFF, "OrderCallbackPhoneNumber", VR::SH, kNoAlt, "1"},
    {0x0040, 0x2011, 0xFFFF, 0xFFFF, "OrderCallbackTelecomInformation", VR::LT, kNoAlt, "1"},
    {0x0040, 0x2016, 0xFFFF, 0xFFFF, "PlacerOrderNumberImagingServiceRequest", VR::LO, kNoAlt, "1"},
    {0x0040, 0x2017, 0xFFFF, 0xFFFF, "FillerOrderNumberImagingServiceRequest", VR::LO, kNoAlt, "1"},
    {0x0040, 0x2400, 0xFFFF, 0xFFFF, "ImagingServiceRequestComments", VR::LT, kNoAlt, "1"},
    {0x0040, 0x3001, 0xFFFF, 0xFFFF, "ConfidentialityConstraintOnPatientDataDescription", VR::LO, kNoAlt, "1"},
    {0x0040, 0x4005, 0xFFFF, 0xFFFF, "ScheduledProcedureStepStartDateTime", VR::DT, kNoAlt, "1"},
    {0x0040, 0x4010, 0xFFFF, 0xFFFF, "ScheduledProcedureStepModificationDateTime", VR::DT, kNoAlt, "1"},
    {0x0040, 0x4011, 0xFFFF, 0xFFFF, "ExpectedCompletionDateTime", VR::DT, kNoAlt, "1"},
    {0x0040, 0x4023, 0xFFFF, 0xFFFF, "ReferencedGeneralPurposeScheduledProcedureStepTransactionUID", VR::UI, kNoAlt, "1"},
    {0x0040, 0x4025, 0xFFFF, 0xFFFF, "ScheduledStationNameCodeSequence", VR::SQ, kNoAlt, "1"},
    {0x0040, 0x4027, 0xFFFF, 0xFFFF, "ScheduledStationGeographicLocationCodeSequence", VR::SQ, kNoAlt, "1"},
    {0x0040, 0x4028, 0xFFFF, 0xFFFF, "PerformedStationNameCodeSequence", VR::SQ, kNoAlt, "1"},
    {0x0040, 0x4029, 0xFFFF, 0xFFFF, "PerformedStationGeographicLocationCodeSequence", VR::SQ, kNoAlt, "1"},
    {0x0040, 0x4034, 0xFFFF, 0xFFFF, "ScheduledHumanPerformersSequence", VR::SQ, kNoAlt, "1"},
    {0x0040, 0x4035, 0xFFFF, 0xFFFF, "ActualHumanPerformersSequence", VR::SQ, kNoAlt, "1"},
    {0x0040, 0x4036, 0xFFFF, 0xFFFF, "HumanPerformerOrganization", VR::LO, kNoAlt, "1"},
    {0x0040, 0x4037, 0xFFFF, 0xFFFF, "HumanPerformerName", VR::PN, kNoAlt, "1"},
    {0x0040, 0xA010, 0xFFFF, 0xFFFF, "RelationshipType", VR::CS, kNoAlt, "1"},
    {0x0040, 0xA027, 0xFFFF, 0xFFFF, "VerifyingOrganization", VR::LO, kNoAlt, "1"},
    {0x0040, 0xA030, 0xFFFF, 0xFFFF, "VerificationDateTime", VR::DT, kNoAlt, "1"},
    {0x0040, 0xA040, 0xFFFF, 0xFFFF, "ValueType", VR::CS, kNoAlt, "1"},
    {0x0040, 0xA043, 0xFFFF, 0xFFFF, "ConceptNameCodeSequence", VR::SQ, kNoAlt, "1"},
    {0x0040, 0xA073, 0xFFFF, 0xFFFF, "VerifyingObserverSequence", VR::SQ, kNoAlt, "1"},
    {0x0040, 0xA075, 0xFFFF, 0xFFFF, "VerifyingObserverName", VR::PN, kNoAlt, "1"},
    {0x0040, 0xA078, 0xFFFF, 0xFFFF, "AuthorObserverSequence", VR::SQ, kNoAlt, "1"},
    {0x0040, 0xA07A, 0xFFFF, 0xFFFF, "ParticipantSequence", VR::SQ, kNoAlt, "1"},
    {0x0040, 0xA07C, 0xFFFF, 0xFFFF, "CustodialOrganizationSequence", VR::SQ, kNoAlt, "1"},
    {0x0040, 0xA088, 0xFFFF, 0xFFFF, "VerifyingObserverIdentificationCodeSequence", VR::SQ, kNoAlt, "1"},
    {0x0040, 0xA120, 0xFFFF, 0xFFFF, "DateTime", VR::DT, kNoAlt, "1"},
    {0x0040, 0xA121, 0xFFFF, 0xFFFF, "Date", VR::DA, kNoAlt, "1"},
    {0x0040, 0xA122, 0xFFFF, 0xFFFF, "Time", VR::TM, kNoAlt, "1"},
    {0x0040, 0xA123, 0xFFFF, 0xFFFF, "PersonName", VR::PN, kNoAlt, "1"},
    {0x0040, 0xA124, 0xFFFF, 0xFFFF, "UID", VR::UI, kNoAlt, "1"},
    {0x0040, 0xA160, 0xFFFF, 0xFFFF, "TextValue", VR::UT, kNoAlt, "1"},
    {0x0040, 0xA730, 0xFFFF, 0xFFFF, "ContentSequence", VR::SQ, kNoAlt, "1"},
    {0x0040, 0xDB0C, 0xFFFF, 0xFFFF, "TemplateExtensionOrganizationUID", VR::UI, kNoAlt, "1"},
    {0x0040, 0xDB0D, 0xFFFF, 0xFFFF, "TemplateExtensionCreatorUID", VR::UI, kNoAlt, "1"},

    {0x0062, 0x0002, 0xFFFF, 0xFFFF, "SegmentSequence", VR::SQ, kNoAlt, "1"},
    {0x0062, 0x0005, 0xFFFF, 0xFFFF, "SegmentLabel", VR::LO, kNoAlt, "1"},

    {0x0070, 0x0001, 0xFFFF, 0xFFFF, "GraphicAnnotationSequence", VR::SQ, kNoAlt, "1"},
    {0x0070, 0x0084, 0xFFFF, 0xFFFF, "ContentCreatorName", VR::PN, kNoAlt, "1"},
    {0x0070, 0x0086, 0xFFFF, 0xFFFF, "ContentCreatorIdentificationCodeSequence", VR::SQ, kNoAlt, "1"},
    {0x0070, 0x031A, 0xFFFF, 0xFFFF, "FiducialUID", VR::UI, kNoAlt, "1"},

    {0x0088, 0x0130, 0xFFFF, 0xFFFF, "StorageMediaFileSetID", VR::SH, kNoAlt, "1"},
    {0x0088, 0x0140, 0xFFFF, 0xFFFF, "StorageMediaFileSetUID", VR::UI, kNoAlt, "1"},
    {0x0088, 0x0200, 0xFFFF, 0xFFFF, "IconImageSequence", VR::SQ, kNoAlt, "1"},
    {0x0088, 0x0904, 0xFFFF, 0xFFFF, "TopicTitle", VR::LO, kNoAlt, "1"},
    {0x0088, 0x0906, 0xFFFF, 0xFFFF, "TopicSubject", VR::LO, kNoAlt, "1"},
    {0x0088, 0x0910, 0xFFFF, 0xFFFF, "TopicAuthor", VR::LO, kNoAlt, "1"},
    {0x0088, 0x0912, 0xFFFF, 0xFFFF, "TopicKeywords", VR::LO, kNoAlt, "1-n"},

    {0x0400, 0x0100, 0xFFFF, 0xFFFF, "DigitalSignatureUID", VR::UI, kNoAlt, "1"},
    {0x0400, 0x0561, 0xFFFF, 0xFFFF, "OriginalAttributesSequence", VR::SQ, kNoAlt, "1"},

    {0x2030, 0x0020, 0xFFFF, 0xFFFF, "TextString", VR::LO, kNoAlt, "1"},

    {0x3006, 0x0002, 0xFFFF, 0xFFFF, "StructureSetLabel", VR::SH, kNoAlt, "1"},
    {0x3006, 0x0008, 0xFFFF, 0xFFFF, "StructureSetDate", VR::DA, kNoAlt, "1"},
    {0x3006, 0x0010, 0xFFFF, 0xFFFF, "ReferencedFrameOfReferenceSequence", VR::SQ, kNoAlt, "1"},
    {0x3006, 0x0012, 0xFFFF, 0xFFFF, "RTReferencedStudySequence", VR::SQ, kNoAlt, "1"},
    {0x3006, 0x0014, 0xFFFF, 0xFFFF, "RTReferencedSeriesSequence", VR::SQ, kNoAlt, "1"},
    {0x3006, 0x0016, 0xFFFF, 0xFFFF, "ContourImageSequence", VR::SQ, kNoAlt, "1"},
    {0x3006, 0x0020, 0xFFFF, 0xFFFF, "StructureSetROISequence", VR::SQ, kNoAlt, "1"},
    {0x3006, 0x0024, 0xFFFF, 0xFFFF, "ReferencedFrameOfReferenceUID", VR::UI, kNoAlt, "1"},
    {0x3006, 0x0026, 0xFFFF, 0xFFFF, "ROIName", VR::LO, kNoAlt, "1"},
    {0x3006, 0x00C2, 0xFFFF, 0xFFFF, "RelatedFrameOfReferenceUID", VR::UI, kNoAlt, "1"},

    {0x300A, 0x0013, 0xFFFF, 0xFFFF, "DoseReferenceUID", VR::UI, kNoAlt, "1"},
    {0x300E, 0x0008, 0xFFFF, 0xFFFF, "ReviewerName", VR::PN, kNoAlt, "1"},

    {0x4000, 0x0010, 0xFFFF, 0xFFFF, "Arbitrary", VR::LT, kNoAlt, "1"},
    {0x4000, 0x4000, 0xFFFF, 0xFFFF, "TextComments", VR::LT, kNoAlt, "1"},

    {0x4008, 0x0042, 0xFFFF, 0xFFFF, "ResultsIDIssuer", VR::LO, kNoAlt, "1"},
    {0x4008, 0x0100, 0xFFFF, 0xFFFF, "InterpretationRecordedDate", VR::DA, kNoAlt, "1"},
    {0x4008, 0x0101, 0xFFFF, 0xFFFF, "InterpretationRecordedTime", VR::TM, kNoAlt, "1"},
    {0x4008, 0x0102, 0xFFFF, 0xFFFF, "InterpretationRecorder", VR::PN, kNoAlt, "1"},
    {0x4008, 0x0108, 0xFFFF, 0xFFFF, "InterpretationTranscriptionDate", VR::DA, kNoAlt, "1"},
    {0x4008, 0x0109, 0xFFFF, 0xFFFF, "InterpretationTranscriptionTime", VR::TM, kNoAlt, "1"},
    {0x4008, 0x010A, 0xFFFF, 0xFFFF, "InterpretationTranscriber", VR::PN, kNoAlt, "1"},
    {0x4008, 0x010B, 0xFFFF, 0xFFFF, "InterpretationText", VR::ST, kNoAlt, "1"},
    {0x4008, 0x010C, 0xFFFF, 0xFFFF, "InterpretationAuthor", VR::PN, kNoAlt, "1"},
    {0x4008, 0x0111, 0xFFFF, 0xFFFF, "InterpretationApproverSequence", VR::SQ, kNoAlt, "1"},
    {0x4008, 0x0112, 0xFFFF, 0xFFFF, "InterpretationApprovalDate", VR::DA, kNoAlt, "1"},
    {0x4008, 0x0113, 0xFFFF, 0xFFFF, "InterpretationApprovalTime", VR::TM, kNoAlt, "1"},
    {0x4008, 0x0114, 0xFFFF, 0xFFFF, "PhysicianApprovingInterpretation", VR::PN, kNoAlt, "1"},
    {0x4008, 0x0115, 0xFFFF, 0xFFFF, "InterpretationDiagnosisDescription", VR::LT, kNoAlt, "1"},
    {0x4008, 0x0118, 0xFFFF, 0xFFFF, "ResultsDistributionListSequence", VR::SQ, kNoAlt, "1"},
    {0x4008, 0x0119, 0xFFFF, 0xFFFF, "DistributionName", VR::PN, kNoAlt, "1"},
    {0x4008, 0x011A, 0xFFFF, 0xFFFF, "DistributionAddress", VR::LO, kNoAlt, "1"},
    {0x4008, 0x0202, 0xFFFF, 0xFFFF, "InterpretationIDIssuer", VR::LO, kNoAlt, "1"},
    {0x4008, 0x0300, 0xFFFF, 0xFFFF, "Impressions", VR::ST, kNoAlt, "1"},
    {0x4008, 0x4000, 0xFFFF, 0xFFFF, "ResultsComments", VR::LT, kNoAlt, "1"},

    {0x7FE0, 0x0010, 0xFFFF, 0xFFFF, "PixelData", VR::OW, VR::OB, "1"},
    {0xFFFC, 0xFFFC, 0xFFFF, 0xFFFF, "DataSetTrailingPadding", VR::OB, kNoAlt, "1"},

    // Repeating groups (PS3.6 chapter 7): curves and overlays.
    {0x5000, 0x3000, 0xFF00, 0xFFFF, "CurveData", VR::OB, VR::OW, "1"},
    {0x5000, 0x0000, 0xFF00, 0x0000, "CurveAttribute", VR::UN, kNoAlt, "1"},
    {0x6000, 0x0010, 0xFF00, 0xFFFF, "OverlayRows", VR::US, kNoAlt, "1"},
    {0x6000, 0x0011, 0xFF00, 0xFFFF, "OverlayColumns", VR::US, kNoAlt, "1"},
    {0x6000, 0x0022, 0xFF00, 0xFFFF, "OverlayDescription", VR::LO, kNoAlt, "1"},
    {0x6000, 0x0040, 0xFF00, 0xFFFF, "OverlayType", VR::CS, kNoAlt, "1"},
    {0x6000, 0x0050, 0xFF00, 0xFFFF, "OverlayOrigin", VR::SS, kNoAlt, "2"},
    {0x6000, 0x0100, 0xFF00, 0xFFFF, "OverlayBitsAllocated", VR::US, kNoAlt, "1"},
    {0x6000, 0x0102, 0xFF00, 0xFFFF, "OverlayBitPosition", VR::US, kNoAlt, "1"},
    {0x6000, 0x3000, 0xFF00, 0xFFFF, "OverlayData", VR::OB, VR::OW, "1"},
    {0x6000, 0x4000, 0xFF00, 0xFFFF, "OverlayComments", VR::LT, kNoAlt, "1"},
};

// The private-creator reservation elements share one synthetic entry.
const DictEntry kPrivateCreatorEntry{
    TagPattern{0x0001, 0x0010, 0x0001, 0xFF00}, "PrivateCreator", VR::LO, {}, "1"};

struct Tables {
  std::map<Tag, DictEntry> exact;
  std::vector<DictEntry> patterns;  // sorted most-specific first
};

const Tables& tables() {
  static const Tables t = [] {
    Tables out;
    for (const RawEntry& raw : kEntries) {
      DictEntry entry{TagPattern{raw.group, raw.element, raw.group_mask,
                                 raw.element_mask},
                      raw.keyword, raw.vr, {}, raw.vm};
      if (raw.alt != kNoAlt) entry.alternate_vrs.push_back(raw.alt);
      if (entry.pattern.is_exact()) {
        out.exact.emplace(Tag{raw.group, raw.element}, std::move(entry));
      } else {
        out.patterns.push_back(std::move(entry));
      }
    }
    std::stable_sort(out.patterns.begin(), out.patterns.end(),
                     [](const DictEntry& a, const DictEntry& b) {
                       return a.pattern.wildcard_digits() <
                              b.pattern.wildcard_digits();
                     });
    return out;
  }();
  return t;
}

}  // namespace

const DictEntry* dict_lookup(Tag tag) {
  const Tables& t = tables();
  auto it = t.exact.find(tag);
  if (it != t.exact.end()) return &it->second;
  if (tag.is_private_creator()) return &kPrivateCreatorEntry;
  for (const DictEntry& entry : t.patterns) {
    if (entry.pattern.matches(tag)) return &entry;
  }
  return nullptr;
}

VR dict_vr(Tag tag) {
  const DictEntry* entry = dict_lookup(tag);
  return entry ? entry->vr : VR::UN;
}

std::optional<Tag> dict_tag_by_keyword(std::string_view keyword) {
  for (const auto& [tag, entry] : tables().exact) {
    if (entry.keyword == keyword) return tag;
  }
  return std::nullopt;
}

}  // namespace deid
