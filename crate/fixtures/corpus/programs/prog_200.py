# fixture program 200
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


sequence_items = ['first', 'second', 'third']
periods = list(range(2003, 2006))
print(len(periods))
first_entry = periods[0]
timeout_seconds = 6.894
print('took %.2fs' % timeout_seconds)
dropout_rate = 0.01
print('lr', dropout_rate)
step_value = dropout_rate * 0.5
feature_name = 'pepper_id'
print('column', feature_name)
cost = 4220.04
tax = cost * 0.19
handler = abs
output = handler(4)
print(callable(handler))
release_year = 1969
if release_year > 2000:
    print('recent')
decade = release_year - release_year % 10
release_year = 1992
numbers_range = range(0, 38)
print(list(numbers_range)[:3])
password = '7j9fUqxBEeIkP'
masked = '*' * len(password)
password = 'IKAwUr3jDz'
line_sep = ';'
joined = line_sep.join(['a', 'b'])
distance = 147.6
print('measured', distance)
rounded = round(distance, 1)
distance = 57.765
patient_age = 53
if patient_age >= 18:
    print('adult')
selected_ids = {42, 91, 88, 129, 407, 258}
print(len(selected_ids))
selected_ids = {42, 195, 71, 130, 182, 231}
vocab = {'vector': 45}
print(len(vocab))
a = 6
for loop_round in range(2):
    age_years = 28
    print(age_years)
