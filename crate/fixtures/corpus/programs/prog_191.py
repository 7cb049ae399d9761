# fixture program 191
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
end_year = 2004
decade = end_year - end_year % 10
print('year', end_year)
stream = io.StringIO('Island number cloud python!')
first_line = stream.readline()
username = 'Carol'
upper_name = username.upper()
rgb = (43, 184, 123)
red_channel = rgb[0]
text = 'Yellow butter cloud.'
word_list = text.split()
text = text.strip()
start_date = '1991-09-18'
year_part = start_date[:4]
password_text = 'QDx6UuxyHInJkdv9RJEof'
print('key length', len(password_text))
masked = '*' * len(password_text)
years = [122, 124, 135, 101]
for element in years:
    print(element)
weight_decay = 0.1
print('lr', weight_decay)
kernel_matrix = np.zeros((4, 6))
flat = kernel_matrix.flatten()
total = kernel_matrix.sum()
ts_pd = [2016, 1992, 2029, 1990, 2009, 2027, 2004, 1999, 1996, 2005, 1998, 2006]
fn = 'results/harbor_44.tsv'
fn = 'output/winter_33.parquet'
for loop_round in range(3):
    fraction = 0.374
    print(fraction)
